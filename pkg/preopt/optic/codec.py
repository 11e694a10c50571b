"""
JSON form of combs: the diagram object plus a `holes` array of
{"slot", "in", "out"} entries in order of appearance.
"""

from typing import Any, Dict, Union

from ..constants import SliceKinds
from ..diagram import Diagram, DiagramError, diagram_from_dict, diagram_to_dict
from ..signature import HoleSpec, Signature, extend_with_holes
from .comb import Comb, Optic, as_comb


def comb_to_dict(comb: Union[Comb, Diagram]) -> Dict[str, Any]:
    comb = as_comb(comb)
    payload = diagram_to_dict(comb.under)
    payload["holes"] = [
        {"slot": h.slot_label, "in": list(h.in_type), "out": list(h.out_type)} for h in comb.holes
    ]
    return payload


def comb_from_dict(data: Dict[str, Any], sig: Signature) -> Union[Comb, Diagram]:
    """
    Rebuild a comb; a document without holes or barriers gives a plain Diagram.

    Raises:
        DiagramError: malformed hole entries
    """
    try:
        specs = [
            HoleSpec(in_type=tuple(h["in"]), out_type=tuple(h["out"]), slot_label=int(h["slot"]))
            for h in data.get("holes", ())
        ]
    except (KeyError, TypeError, ValueError) as e:
        raise DiagramError(f"Malformed hole entry: {e}") from e
    kinds = {s.get("kind") for s in data.get("slices", ()) if isinstance(s, dict)}
    if not specs and SliceKinds.BARRIER not in kinds:
        return diagram_from_dict(data, sig)
    d = diagram_from_dict(data, extend_with_holes(sig, specs))
    comb = as_comb(d)
    if len(comb.holes) == 1:
        return Optic(under=comb.under, holes=comb.holes)
    return comb
