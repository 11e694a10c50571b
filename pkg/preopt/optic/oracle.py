"""
Independent equality check for optics on parts representatives.

An optic is a quadruple (x, y, f, g) with f : a -> x*b*y and
g : x*b'*y -> a'. Two quadruples are identified when a central slice on a
residual wire moves from the end of f to the start of g, or back. The
search runs over such moves with f and g kept in normal form; it never
looks at the hole-extended diagram.
"""

import logging
from collections import deque
from typing import List, Optional, Set, Tuple

from ..config import get_settings
from ..constants import SliceKinds
from ..diagram import ClassBudgetExceededError, Diagram, enumerate_class, make_diagram, normal_form
from ..diagram.schemas import Slice
from .comb import Optic, split_optic
from .schemas import OpticParts

logger = logging.getLogger(__name__)

State = Tuple[Tuple[Slice, ...], int, Tuple[Slice, ...]]


def _state(f: Diagram, x_width: int, g: Diagram, budget: Optional[int]) -> State:
    return (normal_form(f, budget).slices, x_width, normal_form(g, budget).slices)


def _central(d: Diagram, s: Slice) -> bool:
    return s.kind == SliceKinds.GEN and d.sig.generator(s.name).central


def _moves(parts: OpticParts, budget: Optional[int]) -> List[Tuple[Diagram, int, Diagram]]:
    f, g, x_w = parts.f, parts.g, parts.x_width
    b_in, b_out = len(parts.hole.in_type), len(parts.hole.out_type)
    sig = f.sig
    results = []

    for member in enumerate_class(f, budget):
        if not member.slices or not _central(f, member.slices[-1]):
            continue
        last = member.slices[-1]
        gen = sig.generator(last.name)
        m, n = len(gen.dom), len(gen.cod)
        head = make_diagram(sig, member.dom, member.slices[:-1])
        if last.offset + n <= x_w:
            tail = make_diagram(
                sig, _replace(g.dom, last.offset, n, gen.dom), [last] + list(g.slices)
            )
            results.append((head, x_w - n + m, tail))
        if last.offset >= x_w + b_in:
            moved = last.shifted(last.offset - b_in + b_out)
            tail = make_diagram(
                sig, _replace(g.dom, moved.offset, n, gen.dom), [moved] + list(g.slices)
            )
            results.append((head, x_w, tail))

    for member in enumerate_class(g, budget):
        if not member.slices or not _central(g, member.slices[0]):
            continue
        first = member.slices[0]
        gen = sig.generator(first.name)
        m, n = len(gen.dom), len(gen.cod)
        rest = make_diagram(sig, member.levels[1], member.slices[1:])
        if first.offset + m <= x_w:
            grown = make_diagram(sig, f.dom, list(f.slices) + [first])
            results.append((grown, x_w - m + n, rest))
        if first.offset >= x_w + b_out:
            moved = first.shifted(first.offset - b_out + b_in)
            grown = make_diagram(sig, f.dom, list(f.slices) + [moved])
            results.append((grown, x_w, rest))
    return results


def _replace(level, offset: int, width: int, word) -> tuple:
    return tuple(level[:offset]) + tuple(word) + tuple(level[offset + width :])


def parts_equal(o1: Optic, o2: Optic, budget: Optional[int] = None) -> bool:
    """
    Decide optic equality by searching parts representatives.

    Raises:
        ClassBudgetExceededError: the search visits more states than the budget
    """
    if o1.src != o2.src or o1.dst != o2.dst:
        return False
    limit = get_settings().resolve_budget(budget)
    p1, p2 = split_optic(o1), split_optic(o2)
    hole = p1.hole
    target = _state(p2.f, p2.x_width, p2.g, budget)

    start = _state(p1.f, p1.x_width, p1.g, budget)
    seen: Set[State] = {start}
    queue = deque([p1])
    while queue:
        parts = queue.popleft()
        if _state(parts.f, parts.x_width, parts.g, budget) == target:
            logger.debug(f"Parts search matched after {len(seen)} states")
            return True
        for f, x_w, g in _moves(parts, budget):
            key = _state(f, x_w, g, budget)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > limit:
                raise ClassBudgetExceededError(
                    f"Parts search exceeds budget {limit}", limit=limit
                )
            queue.append(OpticParts(f=f, x_width=x_w, hole=hole, g=g))
    logger.debug(f"Parts search exhausted {len(seen)} states without a match")
    return False
