from pydantic import AliasChoices, Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    budget: int = Field(
        default=1_000_000,
        validation_alias=AliasChoices("PREOPT_BUDGET", "preopt.budget"),
    )
    log_level: str = Field(default="INFO", json_schema_extra={"env": "LOG_LEVEL"})
    default_seed: int = Field(
        default=0,
        validation_alias=AliasChoices("PREOPT_SEED", "preopt.seed"),
    )
    default_iters: int = Field(
        default=200,
        validation_alias=AliasChoices("PREOPT_ITERS", "preopt.iters"),
    )

    def resolve_budget(self, budget: int | None = None) -> int:
        """Return the explicit budget if given, otherwise the configured one."""
        if budget is not None:
            return int(budget)
        return int(self.budget)

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "allow"  # Allow extra environment variables


def get_settings() -> Settings:
    """Get engine settings, honouring PREOPT_* environment variables."""
    return Settings()
