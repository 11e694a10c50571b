"""
JSON form of diagrams: {"dom": [...], "slices": [...], "cod": [...]}.
"""

from typing import Any, Dict

from pydantic import ValidationError

from ..constants import SliceKinds
from ..signature import Signature
from .diagram import Diagram, make_diagram
from .exceptions import DiagramError
from .schemas import Slice


def slice_to_dict(s: Slice) -> Dict[str, Any]:
    if s.kind == SliceKinds.BARRIER:
        return {"kind": SliceKinds.BARRIER}
    payload: Dict[str, Any] = {"kind": s.kind, "name": s.name, "offset": s.offset}
    if s.kind == SliceKinds.HOLE:
        payload["slot"] = s.label
    return payload


def slice_from_dict(data: Dict[str, Any]) -> Slice:
    kind = data.get("kind", SliceKinds.GEN)
    try:
        if kind == SliceKinds.BARRIER:
            return Slice.barrier()
        if kind == SliceKinds.HOLE:
            return Slice.hole(int(data["slot"]), int(data.get("offset", 0)))
        if kind == SliceKinds.GEN:
            return Slice.gen(data["name"], int(data.get("offset", 0)))
    except (KeyError, TypeError, ValueError, ValidationError) as e:
        raise DiagramError(f"Malformed slice object {data!r}: {e}") from e
    raise DiagramError(f"Unknown slice kind '{kind}'")


def diagram_to_dict(d: Diagram) -> Dict[str, Any]:
    return {
        "dom": list(d.dom),
        "slices": [slice_to_dict(s) for s in d.slices],
        "cod": list(d.cod),
    }


def diagram_from_dict(data: Dict[str, Any], sig: Signature) -> Diagram:
    """
    Rebuild and typecheck a diagram.

    A "cod" entry, when present, must match the computed codomain.
    """
    try:
        dom = tuple(data.get("dom", ()))
        slices = [slice_from_dict(s) for s in data.get("slices", ())]
    except (AttributeError, TypeError) as e:
        raise DiagramError(f"Malformed diagram object: {e}") from e
    d = make_diagram(sig, dom, slices)
    if "cod" in data and tuple(data["cod"]) != d.cod:
        raise DiagramError(f"Declared codomain {data['cod']} does not match {list(d.cod)}")
    return d
