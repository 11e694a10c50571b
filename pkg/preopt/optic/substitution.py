"""
Hole substitution and evaluation of combs.
"""

import logging
from typing import Dict, List, Mapping, Optional, Sequence, Union

from ..constants import SliceKinds
from ..diagram import (
    Diagram,
    SignatureMismatchError,
    TypeMismatchError,
    disjoint_moves,
    make_diagram,
    width_table,
)
from ..diagram.schemas import Slice
from ..signature import HoleSpec, format_word
from .comb import Comb, Optic, as_comb, comb_signature, find_slot
from .exceptions import OpticError, UnknownSlotError

logger = logging.getLogger(__name__)

Fill = Union[Comb, Diagram]


def _relabel(fill: Comb, taken: Sequence[int]) -> Comb:
    """Move fill holes whose labels collide with `taken` to fresh labels."""
    clashes = [h.slot_label for h in fill.holes if h.slot_label in taken]
    if not clashes:
        return fill
    used = set(taken) | set(fill.slots)
    mapping: Dict[int, int] = {}
    fresh = max(used) + 1
    for label in clashes:
        mapping[label] = fresh
        fresh += 1
    holes = [
        h.model_copy(update={"slot_label": mapping.get(h.slot_label, h.slot_label)})
        for h in fill.holes
    ]
    slices = [
        Slice.hole(mapping.get(s.label, s.label), s.offset) if s.kind == SliceKinds.HOLE else s
        for s in fill.under.slices
    ]
    sig = comb_signature(fill.sig, holes)
    logger.debug(f"Relabelled fill holes {mapping}")
    return Comb(under=make_diagram(sig, fill.dom, slices), holes=tuple(holes))


def substitute(outer: Comb, slot: int, fill: Fill) -> Comb:
    """
    Replace the hole in `slot` by `fill`, whiskered at the hole's offset.

    Fill holes join the result in their order of appearance; labels that
    collide with the outer comb's remaining holes are renamed.

    Raises:
        UnknownSlotError: `outer` has no such slot
        SignatureMismatchError: the fill lives over another signature
        TypeMismatchError: the fill's boundary differs from the hole's type
    """
    fill = as_comb(fill)
    spec = outer.hole(slot)
    if not outer.sig.same_base(fill.sig):
        raise SignatureMismatchError("Fill lives over a different signature")
    if fill.dom != spec.in_type or fill.cod != spec.out_type:
        raise TypeMismatchError(
            f"Slot {slot} expects {format_word(spec.in_type)} -> {format_word(spec.out_type)}, "
            f"fill is {format_word(fill.dom)} -> {format_word(fill.cod)}"
        )
    remaining = [h for h in outer.holes if h.slot_label != slot]
    fill = _relabel(fill, [h.slot_label for h in remaining])

    index = outer.hole_index(slot)
    offset = outer.under.slices[index].offset
    inner = [s.shifted(s.offset + offset) for s in fill.under.slices]
    slices = list(outer.under.slices[:index]) + inner + list(outer.under.slices[index + 1 :])

    by_label = {h.slot_label: h for h in remaining + list(fill.holes)}
    holes: List[HoleSpec] = [by_label[s.label] for s in slices if s.kind == SliceKinds.HOLE]
    sig = comb_signature(outer.sig, holes)
    result = Comb(under=make_diagram(sig, outer.dom, slices), holes=tuple(holes))
    if len(holes) == 1:
        return Optic(under=result.under, holes=result.holes)
    return result


def optic_compose(o1: Optic, o2: Optic) -> Optic:
    """Optic composition: plug o2 into the hole of o1."""
    return substitute(o1, o1.slot, o2)


def reorder_holes(comb: Comb, order: Sequence[int]) -> Comb:
    """
    Exchange adjacent wire-disjoint holes until they appear in `order`.

    This is the interleaving choice of a multi-hole comb; it is not a
    congruence move.

    Raises:
        OpticError: the requested order needs an exchange of holes that are
            not adjacent or not wire-disjoint
    """
    rank = {label: i for i, label in enumerate(order)}
    table = width_table(comb.sig)
    slices = list(comb.under.slices)
    changed = True
    while changed:
        changed = False
        positions = [i for i, s in enumerate(slices) if s.kind == SliceKinds.HOLE]
        for a, b in zip(positions, positions[1:]):
            if rank[slices[a].label] < rank[slices[b].label]:
                continue
            moves = disjoint_moves(slices[a], slices[b], table) if b == a + 1 else []
            if not moves:
                raise OpticError(
                    f"Cannot run slot {slices[b].label} before slot {slices[a].label}: "
                    "holes are not adjacent and wire-disjoint"
                )
            _, first, second = moves[0]
            slices[a], slices[b] = first, second
            changed = True
            break
    holes = tuple(comb.hole(s.label) for s in slices if s.kind == SliceKinds.HOLE)
    return Comb(under=comb.under.with_slices(slices), holes=holes)


def dissolve_barriers(d: Diagram) -> Diagram:
    """Compose out every barrier cut, landing in the base signature."""
    slices = [s for s in d.slices if s.kind != SliceKinds.BARRIER]
    return make_diagram(d.sig.base(), d.dom, slices)


def eval_comb(
    comb: Comb,
    fills: Mapping[int, Diagram],
    order: Optional[Sequence[int]] = None,
) -> Diagram:
    """
    Fill every hole and dissolve barriers.

    Fills run in `order` (a permutation of the comb's slots, defaulting to the
    order of appearance). Barriers inside the comb or the fills are composed
    out afterwards.

    Raises:
        UnknownSlotError: a fill or order entry names no slot, or a slot has no fill
        TypeMismatchError: a fill does not match its slot
    """
    slots = comb.slots
    order = list(slots if order is None else order)
    if sorted(order) != sorted(slots) or len(set(order)) != len(order):
        raise UnknownSlotError(f"Order {order} is not a permutation of slots {slots}")
    for label in fills:
        comb.hole(label)
    missing = [label for label in slots if label not in fills]
    if missing:
        raise UnknownSlotError(f"No fill for slots {missing}", slot=missing[0])
    for label, fill in fills.items():
        if fill.hole_labels:
            raise OpticError(f"Fill for slot {label} still has holes")

    current = reorder_holes(comb, order)
    for label in order:
        current = substitute(current, find_slot(current, label), fills[label])
    result = dissolve_barriers(current.under)
    logger.debug(f"Evaluated {len(slots)}-hole comb in order {order} to {len(result)} slices")
    return result
