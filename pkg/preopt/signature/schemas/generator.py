from pydantic import BaseModel, ConfigDict, field_validator

from .object_word import ObjectWord


class Generator(BaseModel):
    """Schema for a typed generating morphism."""

    model_config = ConfigDict(frozen=True)

    name: str
    """Identifier, unique within a signature."""

    dom: ObjectWord = ()
    """Domain word."""

    cod: ObjectWord = ()
    """Codomain word."""

    central: bool = False
    """Whether the generator lies in the designated centre."""

    @field_validator("name")
    @classmethod
    def validate_name(cls, v):
        if not v or not isinstance(v, str):
            raise ValueError("Generator name must be a non-empty string")
        return v

    @property
    def in_width(self) -> int:
        return len(self.dom)

    @property
    def out_width(self) -> int:
        return len(self.cod)
