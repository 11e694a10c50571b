"""
Equality of combs: the coend quotient is the swap congruence on the
underlying hole-extended diagram.
"""

from typing import Optional

from ..diagram import equal
from .comb import Comb, Optic, UnitElement, relabel_optic


def comb_equal(c1: Comb, c2: Comb, budget: Optional[int] = None) -> bool:
    """Equal iff the hole lists agree and the underlying diagrams are congruent."""
    if c1.holes != c2.holes:
        return False
    return equal(c1.under, c2.under, budget=budget)


def optic_equal(o1: Optic, o2: Optic, budget: Optional[int] = None) -> bool:
    """
    Equality in the optic hom: central slices slide across the hole along
    the residual wires.
    """
    if o1.src != o2.src or o1.dst != o2.dst:
        return False
    return comb_equal(o1, relabel_optic(o2, o1.slot), budget=budget)


def unit_equal(u1: UnitElement, u2: UnitElement, budget: Optional[int] = None) -> bool:
    # central slices cross the cut, nothing else does
    return comb_equal(u1, u2, budget=budget)
