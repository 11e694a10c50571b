from pydantic import BaseModel, ConfigDict, Field

from .object_word import ObjectWord


class HoleSpec(BaseModel):
    """Schema for a hole: a typed, never-central slot in a comb."""

    model_config = ConfigDict(frozen=True)

    in_type: ObjectWord = ()
    """Word the hole consumes."""

    out_type: ObjectWord = ()
    """Word the hole produces."""

    slot_label: int = Field(default=0, ge=0)
    """Small integer naming the slot."""
