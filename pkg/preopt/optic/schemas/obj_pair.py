from pydantic import BaseModel, ConfigDict

from ...signature.schemas import ObjectWord, format_word


class ObjPair(BaseModel):
    """Schema for an object of the optic category: a forward and a backward word."""

    model_config = ConfigDict(frozen=True)

    fwd: ObjectWord = ()
    """Word flowing into the comb."""

    bwd: ObjectWord = ()
    """Word flowing out of the comb."""

    def __str__(self) -> str:
        return f"({format_word(self.fwd)}, {format_word(self.bwd)})"
