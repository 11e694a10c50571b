"""
Optics and combs over the free effectful category.
"""

from .comb import (
    Comb,
    Optic,
    VertElement,
    HorizElement,
    UnitElement,
    as_comb,
    comb_signature,
    optic_new,
    optic_id,
    split_optic,
    relabel_optic,
    is_central_optic,
    vert_element,
    horiz_element,
    unit_element,
)
from .substitution import (
    substitute,
    optic_compose,
    reorder_holes,
    dissolve_barriers,
    eval_comb,
)
from .equality import comb_equal, optic_equal, unit_equal
from .codec import comb_to_dict, comb_from_dict
from .oracle import parts_equal
from .schemas import ObjPair, FillOrder, CentralityFlag, OpticParts
from .exceptions import OpticError, UnknownSlotError

__all__ = [
    "Comb",
    "Optic",
    "VertElement",
    "HorizElement",
    "UnitElement",
    "as_comb",
    "comb_signature",
    "optic_new",
    "optic_id",
    "split_optic",
    "relabel_optic",
    "is_central_optic",
    "vert_element",
    "horiz_element",
    "unit_element",
    "substitute",
    "optic_compose",
    "reorder_holes",
    "dissolve_barriers",
    "eval_comb",
    "comb_equal",
    "optic_equal",
    "unit_equal",
    "parts_equal",
    "comb_to_dict",
    "comb_from_dict",
    "ObjPair",
    "FillOrder",
    "CentralityFlag",
    "OpticParts",
    "OpticError",
    "UnknownSlotError",
]
