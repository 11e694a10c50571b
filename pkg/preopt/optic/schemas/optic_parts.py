from pydantic import BaseModel, ConfigDict, Field

from ...diagram import Diagram
from ...signature.schemas import HoleSpec, ObjectWord


class OpticParts(BaseModel):
    """Schema for a parts representative (x, y, f, g) of a one-hole optic."""

    model_config = ConfigDict(frozen=True)

    f: Diagram
    """Forward part, ending on x * in_type * y."""

    x_width: int = Field(default=0, ge=0)
    """Width of the left residual x."""

    hole: HoleSpec
    """The hole's types and slot."""

    g: Diagram
    """Backward part, starting from x * out_type * y."""

    @property
    def x(self) -> ObjectWord:
        return self.f.cod[: self.x_width]

    @property
    def y(self) -> ObjectWord:
        return self.f.cod[self.x_width + len(self.hole.in_type) :]
