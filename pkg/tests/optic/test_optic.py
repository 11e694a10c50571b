import pytest

from preopt.diagram import SignatureMismatchError, TypeMismatchError, generator_diagram, identity
from preopt.optic import (
    Comb,
    Optic,
    ObjPair,
    OpticError,
    UnknownSlotError,
    comb_from_dict,
    comb_to_dict,
    is_central_optic,
    optic_compose,
    optic_equal,
    optic_id,
    optic_new,
    parts_equal,
    relabel_optic,
    split_optic,
    substitute,
)
from preopt.signature import Generator, HoleSpec, declare_signature

HOLE_B = HoleSpec(in_type=("B",), out_type=("B",), slot_label=0)


@pytest.fixture
def before(sig, diagram):
    """s on the residual wire, run before the hole on B."""
    return optic_new(diagram(("A", "B"), ("s", 0)), 1, HOLE_B, identity(sig, ("A", "B")))


@pytest.fixture
def after(sig, diagram):
    """The same s, run after the hole."""
    return optic_new(identity(sig, ("A", "B")), 1, HOLE_B, diagram(("A", "B"), ("s", 0)))


def test_optic_boundaries(before):
    assert before.src == ObjPair(fwd=("A", "B"), bwd=("A", "B"))
    assert before.dst == ObjPair(fwd=("B",), bwd=("B",))
    assert before.slot == 0


def test_optic_new_rejects_a_misplaced_hole(sig):
    with pytest.raises(TypeMismatchError):
        optic_new(identity(sig, ("A", "B")), 0, HOLE_B, identity(sig, ("A", "B")))


def test_central_residual_slides_across_the_hole(before, after):
    assert optic_equal(before, after)
    assert parts_equal(before, after)


def test_non_central_residual_does_not_slide(sig, diagram):
    o1 = optic_new(diagram(("A", "B"), ("f", 0)), 1, HOLE_B, identity(sig, ("A", "B")))
    o2 = optic_new(identity(sig, ("A", "B")), 1, HOLE_B, diagram(("A", "B"), ("f", 0)))
    assert not optic_equal(o1, o2)
    assert not parts_equal(o1, o2)


def test_central_slice_on_the_hole_wire_does_not_slide(sig, diagram):
    o1 = optic_new(diagram(("B",), ("c", 0)), 0, HOLE_B, identity(sig, ("B",)))
    o2 = optic_new(identity(sig, ("B",)), 0, HOLE_B, diagram(("B",), ("c", 0)))
    assert not optic_equal(o1, o2)
    assert not parts_equal(o1, o2)


def test_optic_equal_ignores_slot_labels(before):
    assert optic_equal(before, relabel_optic(before, 3))


def test_split_optic(before):
    parts = split_optic(before)
    assert parts.x_width == 1
    assert parts.hole == HOLE_B
    assert [s.name for s in parts.f.slices] == ["s"]
    assert parts.g.slices == ()


def test_is_central_optic(before, sig, diagram):
    assert is_central_optic(before)
    o = optic_new(identity(sig, ("B",)), 0, HOLE_B, diagram(("B",), ("g", 0)))
    assert not is_central_optic(o)


def test_identity_optic_is_a_unit(before):
    assert optic_equal(substitute(optic_id(before.src, before.sig), 0, before), before)
    assert optic_equal(optic_compose(before, optic_id(before.dst, before.sig)), before)


def test_substitute_fills_with_a_diagram(before, sig):
    filled = substitute(before, 0, generator_diagram(sig, "g"))
    assert isinstance(filled, Comb)
    assert not isinstance(filled, Optic)
    assert filled.holes == ()
    assert [(s.name, s.offset) for s in filled.under.slices] == [("s", 0), ("g", 1)]


def test_substitute_type_mismatch(before, sig):
    with pytest.raises(TypeMismatchError):
        substitute(before, 0, generator_diagram(sig, "f"))


def test_substitute_rejects_a_fill_over_another_signature(before):
    other = declare_signature(["B"], [Generator(name="k", dom=("B",), cod=("B",), central=False)])
    with pytest.raises(SignatureMismatchError) as exc_info:
        substitute(before, 0, generator_diagram(other, "k"))
    assert exc_info.value.exit_code == 2


def test_substitute_unknown_slot(before, sig):
    with pytest.raises(UnknownSlotError):
        substitute(before, 5, generator_diagram(sig, "g"))


def test_comb_needs_matching_hole_list(before):
    with pytest.raises(OpticError):
        Comb(under=before.under, holes=())


def test_comb_codec(before, sig):
    data = comb_to_dict(before)
    assert data["holes"] == [{"slot": 0, "in": ["B"], "out": ["B"]}]
    restored = comb_from_dict(data, sig)
    assert isinstance(restored, Optic)
    assert optic_equal(restored, before)


def test_comb_codec_without_holes_gives_a_diagram(sig, diagram):
    d = diagram(("A",), ("s", 0))
    assert comb_from_dict(comb_to_dict(d), sig) == d
