from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ...constants import ReservedNames, SliceKinds


class Slice(BaseModel):
    """Schema for one whiskered generator, hole or barrier occurrence."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["gen", "hole", "barrier"] = SliceKinds.GEN
    """Slice kind."""

    name: str
    """Generator name; reserved names for holes and barriers."""

    offset: int = Field(default=0, ge=0)
    """Number of wires strictly to the left."""

    label: Optional[int] = None
    """Slot label, holes only."""

    @classmethod
    def gen(cls, name: str, offset: int = 0) -> "Slice":
        return cls(kind=SliceKinds.GEN, name=name, offset=offset)

    @classmethod
    def hole(cls, label: int, offset: int = 0) -> "Slice":
        return cls(
            kind=SliceKinds.HOLE,
            name=ReservedNames.hole_name(label),
            offset=offset,
            label=label,
        )

    @classmethod
    def barrier(cls) -> "Slice":
        return cls(kind=SliceKinds.BARRIER, name=ReservedNames.BARRIER, offset=0)

    @property
    def sort_key(self) -> Tuple[int, int, str]:
        return (self.offset, SliceKinds.RANK[self.kind], self.name)

    def shifted(self, offset: int) -> "Slice":
        if self.kind == SliceKinds.BARRIER or offset == self.offset:
            return self
        return self.model_copy(update={"offset": offset})
