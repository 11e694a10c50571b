import pytest

from preopt.diagram import compose, equal, generator_diagram, identity
from preopt.optic import (
    CentralityFlag,
    FillOrder,
    HorizElement,
    OpticError,
    UnknownSlotError,
    eval_comb,
    horiz_element,
    optic_id,
    reorder_holes,
    substitute,
    unit_element,
    unit_equal,
    vert_element,
    ObjPair,
)
from preopt.signature import HoleSpec

HOLE_A0 = HoleSpec(in_type=("A",), out_type=("A",), slot_label=0)
HOLE_A1 = HoleSpec(in_type=("A",), out_type=("A",), slot_label=1)
HOLE_B1 = HoleSpec(in_type=("B",), out_type=("B",), slot_label=1)


@pytest.fixture
def side_by_side(sig):
    """Two holes on A and B, the left one running first."""
    ab = identity(sig, ("A", "B"))
    return horiz_element(ab, 0, HOLE_A0, 0, HOLE_B1, ab, order=FillOrder.AB)


def test_horizontal_element_order(side_by_side):
    assert side_by_side.fill_order == FillOrder.AB
    assert side_by_side.left_slot == 0
    assert side_by_side.right_slot == 1
    swapped = reorder_holes(side_by_side, [1, 0])
    assert swapped.slots == [1, 0]


@pytest.mark.parametrize("order", [FillOrder.AB, FillOrder.BA])
def test_horizontal_order_with_a_zero_width_output(sig, order):
    # A -> I leaves the right hole at the left hole's offset when it runs second
    discard = HoleSpec(in_type=("A",), out_type=(), slot_label=0)
    k = horiz_element(identity(sig, ("A", "B")), 0, discard, 0, HOLE_B1, identity(sig, ("B",)), order=order)
    assert k.fill_order == order
    assert k.left_slot == 0
    assert k.right_slot == 1


def test_horizontal_order_read_from_offsets(sig):
    discard = HoleSpec(in_type=("A",), out_type=(), slot_label=0)
    k = horiz_element(identity(sig, ("A", "B")), 0, discard, 0, HOLE_B1, identity(sig, ("B",)))
    assert [s.offset for s in k.under.slices] == [0, 0]
    bare = HorizElement(under=k.under, holes=k.holes)
    assert bare.fill_order == FillOrder.AB
    assert bare.left_slot == 0


def test_horizontal_fill_orders_differ_for_non_central_fills(side_by_side, sig):
    fills = {0: generator_diagram(sig, "f"), 1: generator_diagram(sig, "g")}
    ab = eval_comb(side_by_side, fills, [0, 1])
    ba = eval_comb(side_by_side, fills, [1, 0])
    assert [s.name for s in ab.slices] == ["f", "g"]
    assert [s.name for s in ba.slices] == ["g", "f"]
    assert not equal(ab, ba)


def test_horizontal_fill_orders_agree_when_one_fill_is_central(side_by_side, sig):
    fills = {0: generator_diagram(sig, "s"), 1: generator_diagram(sig, "g")}
    assert equal(eval_comb(side_by_side, fills, [0, 1]), eval_comb(side_by_side, fills, [1, 0]))


def test_eval_comb_needs_every_fill(side_by_side, sig):
    with pytest.raises(UnknownSlotError):
        eval_comb(side_by_side, {0: generator_diagram(sig, "f")})


def test_eval_comb_rejects_bad_order(side_by_side, sig):
    fills = {0: generator_diagram(sig, "f"), 1: generator_diagram(sig, "g")}
    with pytest.raises(UnknownSlotError):
        eval_comb(side_by_side, fills, [0, 0])


def test_vertical_element_flags(sig, diagram):
    a = identity(sig, ("A",))
    pure = vert_element(a, 0, HOLE_A0, diagram(("A",), ("s", 0)), 0, HOLE_A1, a)
    effectful = vert_element(a, 0, HOLE_A0, diagram(("A",), ("f", 0)), 0, HOLE_A1, a)
    assert pure.flag == CentralityFlag.P0
    assert effectful.flag == CentralityFlag.P1


def test_vertical_holes_cannot_be_reordered(sig):
    a = identity(sig, ("A",))
    stacked = vert_element(a, 0, HOLE_A0, a, 0, HOLE_A1, a)
    with pytest.raises(OpticError):
        reorder_holes(stacked, [1, 0])


def test_vertical_element_needs_distinct_slots(sig):
    a = identity(sig, ("A",))
    with pytest.raises(OpticError):
        vert_element(a, 0, HOLE_A0, a, 0, HOLE_A0, a)


def test_substitute_relabels_colliding_fill_holes(sig):
    a = identity(sig, ("A",))
    stacked = vert_element(a, 0, HOLE_A0, a, 0, HOLE_A1, a)
    result = substitute(stacked, 0, optic_id(ObjPair(fwd=("A",), bwd=("A",)), sig, slot=1))
    assert result.slots == [2, 1]


def test_central_slice_crosses_the_unit_cut(sig):
    p, q = identity(sig, ("A",)), identity(sig, ("A",))
    t = generator_diagram(sig, "s")
    assert unit_equal(unit_element(compose(p, t), q), unit_element(p, compose(t, q)))


def test_non_central_slice_stays_on_its_side_of_the_cut(sig):
    p, q = identity(sig, ("A",)), identity(sig, ("A",))
    t = generator_diagram(sig, "f")
    u1 = unit_element(compose(p, t), q)
    u2 = unit_element(p, compose(t, q))
    assert u1.cut == ("A",)
    assert not unit_equal(u1, u2)


def test_dissolving_the_cut_composes(sig):
    p, t = generator_diagram(sig, "h"), generator_diagram(sig, "f", right=("A",))
    u = unit_element(p, t)
    assert equal(eval_comb(u, {}), compose(p, t))
