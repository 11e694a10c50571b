from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field


class SuiteResult(BaseModel):
    """Schema for the outcome of one seeded law suite run."""

    model_config = ConfigDict(frozen=True)

    suite: str
    """Suite name."""

    passed: bool
    """True when no iteration produced a counterexample."""

    seed: int = 0
    """Seed the generator was started from."""

    iterations: int = Field(default=0, ge=0)
    """Number of instances checked before stopping."""

    counterexample: Optional[Dict[str, Any]] = None
    """The first failing instance, as printable literals."""

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "suite": self.suite,
            "passed": self.passed,
            "seed": self.seed,
            "iterations": self.iterations,
        }
        if self.counterexample is not None:
            payload["counterexample"] = self.counterexample
        return payload
