from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from ...infra.union_find import canonical_key


class CoendResult(BaseModel):
    """Schema for a coend: the quotient classes and the coprojections into them."""

    model_config = ConfigDict(frozen=True)

    classes: Dict[Any, Tuple[Any, ...]] = {}
    """Class representative -> members (object, element)."""

    coproj: Dict[Any, Dict[Any, Any]] = {}
    """Object c -> (element of P(c, c) -> class representative)."""

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> List[Any]:
        return sorted(self.classes, key=canonical_key)

    def cls(self, c: Any, x: Any) -> Any:
        return self.coproj[c][x]


class V2CoendResult(BaseModel):
    """Schema for the coends of both layers of a V2-profunctor."""

    model_config = ConfigDict(frozen=True)

    coend0: CoendResult
    coend1: CoendResult
    induced: Dict[Any, Any] = {}
    """Class of the first coend -> class of the second."""

    @property
    def is_bijective(self) -> bool:
        images = list(self.induced.values())
        return len(set(images)) == len(images) == len(self.coend1)
