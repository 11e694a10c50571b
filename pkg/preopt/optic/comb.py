"""
Combs: diagrams over a hole-extended signature with an ordered hole list.

Optics are one-hole combs. Vertical and horizontal tensor elements are
two-hole combs; unit elements carry a single barrier cut and no holes.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..constants import SliceKinds
from ..diagram import Diagram, TypeMismatchError, make_diagram, merge_signatures
from ..diagram.schemas import Slice
from ..signature import HoleSpec, Signature, extend_with_holes, format_word
from ..signature.schemas import ObjectWord
from .exceptions import OpticError, UnknownSlotError
from .schemas import CentralityFlag, FillOrder, ObjPair, OpticParts

logger = logging.getLogger(__name__)


def comb_signature(sig: Signature, holes: Iterable[HoleSpec]) -> Signature:
    """The base of sig extended with exactly the given holes."""
    return extend_with_holes(sig.base(), holes)


def holes_in_order(d: Diagram) -> List[HoleSpec]:
    return [d.sig.hole(s.label) for s in d.slices if s.kind == SliceKinds.HOLE]


class Comb(BaseModel):
    """A diagram with holes; `holes` lists them in order of appearance."""

    model_config = ConfigDict(frozen=True)

    under: Diagram
    holes: Tuple[HoleSpec, ...] = ()

    @model_validator(mode="after")
    def validate_holes(self):
        present = self.under.hole_labels
        listed = [h.slot_label for h in self.holes]
        if present != listed:
            raise OpticError(f"Comb lists holes {listed} but its diagram has {present}")
        for spec in self.holes:
            if self.under.sig.holes.get(spec.slot_label) != spec:
                raise OpticError(f"Hole slot {spec.slot_label} is typed differently in the signature")
        return self

    def __hash__(self) -> int:
        return hash((self.under, self.holes))

    @property
    def sig(self) -> Signature:
        return self.under.sig

    @property
    def dom(self) -> ObjectWord:
        return self.under.dom

    @property
    def cod(self) -> ObjectWord:
        return self.under.cod

    @property
    def slots(self) -> List[int]:
        return [h.slot_label for h in self.holes]

    def hole(self, slot: int) -> HoleSpec:
        for spec in self.holes:
            if spec.slot_label == slot:
                return spec
        raise UnknownSlotError(f"Comb has no hole in slot {slot}", slot=slot)

    def hole_index(self, slot: int) -> int:
        """Position of the slot's hole slice in the slice sequence."""
        self.hole(slot)
        for i, s in enumerate(self.under.slices):
            if s.kind == SliceKinds.HOLE and s.label == slot:
                return i
        raise UnknownSlotError(f"Comb has no hole in slot {slot}", slot=slot)


class Optic(Comb):
    """A one-hole comb: an element of the optic hom from src around dst."""

    @model_validator(mode="after")
    def validate_single_hole(self):
        if len(self.holes) != 1:
            raise OpticError(f"An optic has exactly one hole, got {len(self.holes)}")
        return self

    @property
    def src(self) -> ObjPair:
        return ObjPair(fwd=self.under.dom, bwd=self.under.cod)

    @property
    def dst(self) -> ObjPair:
        spec = self.holes[0]
        return ObjPair(fwd=spec.in_type, bwd=spec.out_type)

    @property
    def slot(self) -> int:
        return self.holes[0].slot_label


def _non_hole_central(comb: Comb) -> bool:
    for s in comb.under.slices:
        if s.kind == SliceKinds.HOLE:
            continue
        if s.kind == SliceKinds.BARRIER or not comb.sig.generator(s.name).central:
            return False
    return True


class VertElement(Comb):
    """Two holes in sequence: the first hole strictly before the second."""

    @model_validator(mode="after")
    def validate_two_holes(self):
        if len(self.holes) != 2:
            raise OpticError(f"A vertical element has exactly two holes, got {len(self.holes)}")
        return self

    @property
    def flag(self) -> CentralityFlag:
        return CentralityFlag.P0 if _non_hole_central(self) else CentralityFlag.P1


class HorizElement(Comb):
    """Two wire-disjoint holes at consecutive slice positions."""

    order: Optional[FillOrder] = None
    """Order given at construction; read off the hole offsets when absent."""

    @model_validator(mode="after")
    def validate_side_by_side(self):
        if len(self.holes) != 2:
            raise OpticError(f"A horizontal element has exactly two holes, got {len(self.holes)}")
        i = self.hole_index(self.holes[0].slot_label)
        j = self.hole_index(self.holes[1].slot_label)
        if j != i + 1:
            raise OpticError("Holes of a horizontal element must be adjacent")
        first, second = self.under.slices[i], self.under.slices[j]
        n1 = len(self.holes[0].out_type)
        m2 = len(self.holes[1].in_type)
        if not (second.offset + m2 <= first.offset or second.offset >= first.offset + n1):
            raise OpticError("Holes of a horizontal element must be wire-disjoint")
        return self

    @property
    def fill_order(self) -> FillOrder:
        """AB when the left hole runs first."""
        if self.order is not None:
            return FillOrder(self.order)
        i = self.hole_index(self.holes[0].slot_label)
        first, second = self.under.slices[i], self.under.slices[i + 1]
        n1 = len(self.holes[0].out_type)
        m2 = len(self.holes[1].in_type)
        # a zero-width output leaves the second hole at the first one's offset
        second_on_left = second.offset + m2 <= first.offset and second.offset < first.offset + n1
        return FillOrder.BA if second_on_left else FillOrder.AB

    @property
    def left_slot(self) -> int:
        return self.holes[0].slot_label if self.fill_order == FillOrder.AB else self.holes[1].slot_label

    @property
    def right_slot(self) -> int:
        return self.holes[1].slot_label if self.fill_order == FillOrder.AB else self.holes[0].slot_label


class UnitElement(Comb):
    """A hole-free diagram cut once by a barrier."""

    @model_validator(mode="after")
    def validate_single_barrier(self):
        if self.holes:
            raise OpticError("A unit element has no holes")
        barriers = sum(1 for s in self.under.slices if s.kind == SliceKinds.BARRIER)
        if barriers != 1:
            raise OpticError(f"A unit element has exactly one barrier, got {barriers}")
        return self

    @property
    def boundary(self) -> ObjPair:
        return ObjPair(fwd=self.under.dom, bwd=self.under.cod)

    @property
    def cut(self) -> ObjectWord:
        """The level word at the barrier."""
        for i, s in enumerate(self.under.slices):
            if s.kind == SliceKinds.BARRIER:
                return self.under.levels[i]
        raise OpticError("Unit element without a barrier")


def as_comb(d) -> Comb:
    """Promote a plain diagram to a hole-free comb."""
    if isinstance(d, Comb):
        return d
    holes = holes_in_order(d)
    return Comb(under=d, holes=tuple(holes))


def _chain(sig: Signature, parts: Sequence[Tuple[str, ObjectWord, ObjectWord, Sequence[Slice]]]) -> Diagram:
    """
    Concatenate typed pieces, checking each boundary against the previous one.

    Each piece is (label, dom, cod, slices).
    """
    dom = parts[0][1]
    level = dom
    slices: List[Slice] = []
    for label, p_dom, p_cod, p_slices in parts:
        if p_dom != level:
            raise TypeMismatchError(
                f"{label} starts at {format_word(p_dom)} but the comb is at {format_word(level)}"
            )
        slices.extend(p_slices)
        level = p_cod
    return make_diagram(sig, dom, slices)


def _hole_piece(spec: HoleSpec, offset: int, level: ObjectWord, label: str):
    end = offset + len(spec.in_type)
    if offset > len(level) or level[offset:end] != spec.in_type:
        raise TypeMismatchError(
            f"{label} {format_word(spec.in_type)} does not sit at offset {offset} of {format_word(level)}"
        )
    out = level[:offset] + spec.out_type + level[end:]
    return (label, level, out, [Slice.hole(spec.slot_label, offset)])


def _diagram_piece(label: str, d: Diagram):
    return (label, d.dom, d.cod, list(d.slices))


def optic_new(f: Diagram, x_width: int, hole: HoleSpec, g: Diagram) -> Optic:
    """
    Build the optic f ; hole@x_width ; g.

    Raises:
        TypeMismatchError: the split of cod(f) or dom(g) does not fit the hole
    """
    sig = comb_signature(merge_signatures(f.sig, g.sig), [hole])
    pieces = [
        _diagram_piece("forward part", f),
        _hole_piece(hole, x_width, f.cod, "hole"),
        _diagram_piece("backward part", g),
    ]
    under = _chain(sig, pieces)
    return Optic(under=under, holes=(hole,))


def optic_id(p: ObjPair, sig: Signature, slot: int = 0) -> Optic:
    """The bare hole of type p."""
    spec = HoleSpec(in_type=p.fwd, out_type=p.bwd, slot_label=slot)
    ext = comb_signature(sig, [spec])
    return Optic(under=make_diagram(ext, p.fwd, [Slice.hole(slot, 0)]), holes=(spec,))


def split_optic(o: Optic) -> OpticParts:
    """Read the parts representative (x, y, f, g) off a one-hole comb."""
    i = o.hole_index(o.slot)
    base = o.sig.base()
    levels = o.under.levels
    f = make_diagram(base, o.under.dom, o.under.slices[:i])
    g = make_diagram(base, levels[i + 1], o.under.slices[i + 1 :])
    return OpticParts(f=f, x_width=o.under.slices[i].offset, hole=o.holes[0], g=g)


def is_central_optic(o: Comb) -> bool:
    """True iff every non-hole slice is a central generator."""
    return _non_hole_central(o)


def vert_element(
    f: Diagram,
    a_offset: int,
    hole_a: HoleSpec,
    m: Diagram,
    b_offset: int,
    hole_b: HoleSpec,
    g: Diagram,
) -> VertElement:
    """
    Stack two holes: f ; hole_a@a_offset ; m ; hole_b@b_offset ; g.

    Raises:
        TypeMismatchError: a boundary in the chain does not match
        OpticError: both holes use the same slot
    """
    if hole_a.slot_label == hole_b.slot_label:
        raise OpticError(f"Both holes use slot {hole_a.slot_label}")
    base = merge_signatures(merge_signatures(f.sig, m.sig), g.sig)
    sig = comb_signature(base, [hole_a, hole_b])
    first = _hole_piece(hole_a, a_offset, f.cod, "first hole")
    second = _hole_piece(hole_b, b_offset, m.cod, "second hole")
    under = _chain(
        sig,
        [
            _diagram_piece("forward part", f),
            first,
            _diagram_piece("middle part", m),
            second,
            _diagram_piece("backward part", g),
        ],
    )
    element = VertElement(under=under, holes=(hole_a, hole_b))
    logger.debug(f"Built vertical element with flag {element.flag.value}")
    return element


def horiz_element(
    f: Diagram,
    x_width: int,
    hole_a: HoleSpec,
    y_width: int,
    hole_b: HoleSpec,
    g: Diagram,
    order: FillOrder = FillOrder.AB,
) -> HorizElement:
    """
    Place two holes side by side between f and g, in the given order.

    cod f must be x*a*y*b*z with |x| = x_width and |y| = y_width.

    Raises:
        TypeMismatchError: the boundaries do not split as required
    """
    if hole_a.slot_label == hole_b.slot_label:
        raise OpticError(f"Both holes use slot {hole_a.slot_label}")
    base = merge_signatures(f.sig, g.sig)
    sig = comb_signature(base, [hole_a, hole_b])
    level = f.cod
    a_in, a_out = len(hole_a.in_type), len(hole_a.out_type)
    if FillOrder(order) == FillOrder.AB:
        pa = _hole_piece(hole_a, x_width, level, "left hole")
        pb = _hole_piece(hole_b, x_width + a_out + y_width, pa[2], "right hole")
        pieces, holes = [pa, pb], (hole_a, hole_b)
    else:
        pb = _hole_piece(hole_b, x_width + a_in + y_width, level, "right hole")
        pa = _hole_piece(hole_a, x_width, pb[2], "left hole")
        pieces, holes = [pb, pa], (hole_b, hole_a)
    under = _chain(
        sig,
        [_diagram_piece("forward part", f), *pieces, _diagram_piece("backward part", g)],
    )
    return HorizElement(under=under, holes=holes, order=FillOrder(order))


def unit_element(p: Diagram, q: Diagram) -> UnitElement:
    """
    p ; barrier ; q.

    Raises:
        TypeMismatchError: cod p != dom q
    """
    sig = comb_signature(merge_signatures(p.sig, q.sig), [])
    if p.cod != q.dom:
        raise TypeMismatchError(
            f"Cannot cut between {format_word(p.cod)} and {format_word(q.dom)}"
        )
    under = make_diagram(sig, p.dom, list(p.slices) + [Slice.barrier()] + list(q.slices))
    return UnitElement(under=under)


def find_slot(comb: Comb, slot: Optional[int]) -> int:
    """Resolve an optional slot argument to a concrete hole label."""
    if slot is not None:
        comb.hole(slot)
        return slot
    if len(comb.holes) != 1:
        raise UnknownSlotError("A slot must be named for combs with several holes")
    return comb.holes[0].slot_label


def relabel_optic(o: Optic, slot: int) -> Optic:
    """The same optic with its hole moved to another slot label."""
    if o.slot == slot:
        return o
    spec = o.holes[0].model_copy(update={"slot_label": slot})
    slices = [
        Slice.hole(slot, s.offset) if s.kind == SliceKinds.HOLE else s for s in o.under.slices
    ]
    sig = comb_signature(o.sig, [spec])
    return Optic(under=make_diagram(sig, o.under.dom, slices), holes=(spec,))
