"""
The central-interchange congruence: swap moves, exact classes, normal forms.

Two adjacent slices may exchange places when
  - both are generators or holes on disjoint wires and at least one is a
    central generator, or
  - one is a barrier and the other a central generator.
"""

import logging
from collections import deque
from typing import List, Optional, Sequence, Set, Tuple

from ..config import get_settings
from ..constants import SliceKinds, SwapCases
from ..signature import format_word
from .diagram import Diagram, WidthTable, merge_signatures, width_table
from .exceptions import ClassBudgetExceededError, NotSwappableError
from .schemas import Slice

logger = logging.getLogger(__name__)

Slices = Tuple[Slice, ...]
SortKey = Tuple[Tuple[int, int, str], ...]


def sequence_key(slices: Sequence[Slice]) -> SortKey:
    return tuple(s.sort_key for s in slices)


def _is_central_gen(s: Slice, table: WidthTable) -> bool:
    return s.kind == SliceKinds.GEN and table[s.name][2]


def pair_moves(first: Slice, second: Slice, table: WidthTable) -> List[Tuple[str, Slice, Slice]]:
    """
    Every legal exchange of `first` followed by `second`.

    Returns (case, new_first, new_second) triples; barrier crossings use the
    case name "barrier". Empty when the pair is not swappable.
    """
    kinds = {first.kind, second.kind}
    if SliceKinds.BARRIER in kinds:
        other = second if first.kind == SliceKinds.BARRIER else first
        if other.kind == SliceKinds.GEN and table[other.name][2]:
            return [(SliceKinds.BARRIER, second, first)]
        return []
    if not (_is_central_gen(first, table) or _is_central_gen(second, table)):
        return []
    return disjoint_moves(first, second, table)


def disjoint_moves(first: Slice, second: Slice, table: WidthTable) -> List[Tuple[str, Slice, Slice]]:
    """Offset arithmetic of an exchange of two wire-disjoint slices, ignoring centrality."""
    o1, o2 = first.offset, second.offset
    m1, n1, _ = table[first.name]
    m2, n2, _ = table[second.name]
    moves = []
    if o2 + m2 <= o1:
        moves.append((SwapCases.LEFT, second, first.shifted(o1 + n2 - m2)))
    if o2 >= o1 + n1:
        moves.append((SwapCases.RIGHT, second.shifted(o2 - n1 + m1), first))
    return moves


def swap_moves(d: Diagram, i: int) -> List[Diagram]:
    """All distinct diagrams obtained by one legal swap at positions i, i+1."""
    if i < 0 or i + 1 >= len(d.slices):
        return []
    table = width_table(d.sig)
    results = []
    for _, a, b in pair_moves(d.slices[i], d.slices[i + 1], table):
        slices = d.slices[:i] + (a, b) + d.slices[i + 2 :]
        if all(r.slices != slices for r in results):
            results.append(d.with_slices(slices))
    return results


def swap_adjacent(d: Diagram, i: int, case: Optional[str] = None) -> Diagram:
    """
    Exchange slices i and i+1.

    When both offset cases apply (a zero-width output meeting a zero-width
    input at the same offset) the LEFT case is taken unless `case` says
    otherwise.

    Raises:
        NotSwappableError: the pair is not swappable, or `case` does not apply
    """
    if i < 0 or i + 1 >= len(d.slices):
        raise NotSwappableError(f"No adjacent pair at index {i} in a {len(d)}-slice diagram")
    table = width_table(d.sig)
    moves = pair_moves(d.slices[i], d.slices[i + 1], table)
    if case is not None:
        moves = [m for m in moves if m[0] in (case, SliceKinds.BARRIER)]
    if not moves:
        first, second = d.slices[i], d.slices[i + 1]
        raise NotSwappableError(
            f"Slices {first.name}@{first.offset} and {second.name}@{second.offset} "
            f"at index {i} are not swappable"
        )
    _, a, b = moves[0]
    return d.with_slices(d.slices[:i] + (a, b) + d.slices[i + 2 :])


def _neighbours(slices: Slices, table: WidthTable) -> List[Slices]:
    result = []
    for i in range(len(slices) - 1):
        for _, a, b in pair_moves(slices[i], slices[i + 1], table):
            result.append(slices[:i] + (a, b) + slices[i + 2 :])
    return result


def _class_slices(d: Diagram, budget: Optional[int]) -> Set[Slices]:
    limit = get_settings().resolve_budget(budget)
    table = width_table(d.sig)
    seen: Set[Slices] = {d.slices}
    queue = deque([d.slices])
    while queue:
        current = queue.popleft()
        for nxt in _neighbours(current, table):
            if nxt in seen:
                continue
            seen.add(nxt)
            if len(seen) > limit:
                raise ClassBudgetExceededError(
                    f"Congruence class of a {len(d)}-slice diagram exceeds budget {limit}",
                    limit=limit,
                )
            queue.append(nxt)
    logger.debug(f"Enumerated class of size {len(seen)} for {len(d)}-slice diagram")
    return seen


def enumerate_class(d: Diagram, budget: Optional[int] = None) -> Set[Diagram]:
    """
    The full congruence class of d, by breadth-first search over swap moves.

    Raises:
        ClassBudgetExceededError: the class has more members than the budget
    """
    return {d.with_slices(s) for s in _class_slices(d, budget)}


def _bubble_to_front(slices: Slices, j: int, table: WidthTable) -> Optional[Slices]:
    """Move slices[j] to position 0 by legal swaps, or None when blocked."""
    current = list(slices)
    for k in range(j - 1, -1, -1):
        moves = pair_moves(current[k], current[k + 1], table)
        if not moves:
            return None
        _, a, b = moves[0]
        current[k], current[k + 1] = a, b
    return tuple(current)


def greedy_normal_form(d: Diagram) -> Diagram:
    """
    Front-extraction normal form.

    At each position, every later slice that can be bubbled to the front is
    tried and the one with the least key wins. Exact whenever all generator
    and hole slices have nonempty domain and codomain; `normal_form` checks
    that condition and otherwise falls back to the exact class minimum.
    """
    table = width_table(d.sig)
    prefix: List[Slice] = []
    rest: Slices = d.slices
    while rest:
        best: Optional[Slices] = None
        for j in range(len(rest)):
            candidate = _bubble_to_front(rest, j, table)
            if candidate is None:
                continue
            if best is None or candidate[0].sort_key < best[0].sort_key:
                best = candidate
        prefix.append(best[0])
        rest = best[1:]
    return d.with_slices(prefix)


def greedy_is_exact(d: Diagram) -> bool:
    """True when no generator or hole in d has an empty domain or codomain."""
    table = width_table(d.sig)
    for s in d.slices:
        if s.kind == SliceKinds.BARRIER:
            continue
        m, n, _ = table[s.name]
        if m == 0 or n == 0:
            return False
    return True


def exact_normal_form(d: Diagram, budget: Optional[int] = None) -> Diagram:
    """The lexicographically least class member, by full enumeration."""
    return d.with_slices(min(_class_slices(d, budget), key=sequence_key))


def normal_form(d: Diagram, budget: Optional[int] = None) -> Diagram:
    """
    Canonical representative: the least member of the congruence class
    under the slice order (offset, Gen < Hole < Barrier, name).

    Raises:
        ClassBudgetExceededError: only on the enumeration fallback
    """
    if greedy_is_exact(d):
        return greedy_normal_form(d)
    logger.debug(f"Zero-width slices present, normalising {len(d)}-slice diagram exactly")
    return exact_normal_form(d, budget)


def equal(d1: Diagram, d2: Diagram, budget: Optional[int] = None) -> bool:
    """
    Equality in the free effectful category.

    Raises:
        SignatureMismatchError: different signatures
        ClassBudgetExceededError: enumeration fallback over budget
    """
    merge_signatures(d1.sig, d2.sig)
    if d1.dom != d2.dom or d1.cod != d2.cod:
        logger.debug(
            f"Boundaries differ: {format_word(d1.dom)}->{format_word(d1.cod)} vs "
            f"{format_word(d2.dom)}->{format_word(d2.cod)}"
        )
        return False
    if sorted(s.name for s in d1.slices) != sorted(s.name for s in d2.slices):
        return False
    return normal_form(d1, budget).slices == normal_form(d2, budget).slices

