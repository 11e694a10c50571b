import pytest

from preopt.diagram import (
    Slice,
    SignatureMismatchError,
    TensorOrder,
    TypeMismatchError,
    compose,
    diagram_from_dict,
    diagram_to_dict,
    format_diagram,
    generator_diagram,
    identity,
    is_central,
    make_diagram,
    tensor_seq,
    whisker,
    DiagramError,
)
from preopt.signature import Generator, HoleSpec, declare_signature, extend_with_holes


def test_levels_and_codomain(diagram):
    d = diagram(("A", "B"), ("h", 0), ("g", 2))
    assert d.levels == [("A", "B"), ("A", "A", "B"), ("A", "A", "B")]
    assert d.cod == ("A", "A", "B")
    assert len(d) == 2


def test_ill_typed_slice_reports_its_index(diagram):
    with pytest.raises(TypeMismatchError) as exc:
        diagram(("A",), ("s", 0), ("g", 0))
    assert exc.value.index == 1


def test_offset_past_the_level_is_rejected(diagram):
    with pytest.raises(TypeMismatchError):
        diagram(("A",), ("s", 1))


def test_barrier_needs_hole_extension(sig):
    with pytest.raises(TypeMismatchError):
        make_diagram(sig, ("A",), [Slice.barrier()])


def test_hole_slot_cannot_appear_twice(sig):
    ext = extend_with_holes(sig, [HoleSpec(in_type=("A",), out_type=("A",), slot_label=0)])
    with pytest.raises(TypeMismatchError):
        make_diagram(ext, ("A",), [Slice.hole(0, 0), Slice.hole(0, 0)])


def test_identity_has_no_slices(sig):
    d = identity(sig, ("A", "B"))
    assert d.slices == ()
    assert d.cod == ("A", "B")
    assert is_central(d)


def test_compose_concatenates(diagram):
    d = compose(diagram(("A",), ("h", 0)), diagram(("A", "A"), ("f", 1)))
    assert [s.name for s in d.slices] == ["h", "f"]
    assert d.cod == ("A", "A")


def test_compose_type_mismatch(diagram):
    with pytest.raises(TypeMismatchError):
        compose(diagram(("A",), ("s", 0)), diagram(("B",), ("g", 0)))


def test_compose_over_different_signatures_raises(diagram):
    other = declare_signature(["A"], [Generator(name="k", dom=("A",), cod=("A",))])
    with pytest.raises(SignatureMismatchError):
        compose(diagram(("A",), ("s", 0)), make_diagram(other, ("A",), [Slice.gen("k", 0)]))


def test_whisker_shifts_offsets(diagram):
    d = whisker(("B", "B"), diagram(("A",), ("f", 0)), ("A",))
    assert d.dom == ("B", "B", "A", "A")
    assert d.slices[0].offset == 2


def test_tensor_seq_orders(sig):
    f, g = generator_diagram(sig, "f"), generator_diagram(sig, "g")
    left_first = tensor_seq(f, g, TensorOrder.LEFT_FIRST)
    right_first = tensor_seq(f, g, TensorOrder.RIGHT_FIRST)
    assert [(s.name, s.offset) for s in left_first.slices] == [("f", 0), ("g", 1)]
    assert [(s.name, s.offset) for s in right_first.slices] == [("g", 1), ("f", 0)]
    assert left_first.dom == right_first.dom == ("A", "B")


def test_is_central(diagram):
    assert is_central(diagram(("A", "B"), ("s", 0), ("c", 1), ("h", 0)))
    assert not is_central(diagram(("A",), ("s", 0), ("f", 0)))


def test_generator_diagram_with_whiskers(sig):
    d = generator_diagram(sig, "g", left=("A",), right=("A",))
    assert d.dom == ("A", "B", "A")
    assert d.slices == (Slice.gen("g", 1),)


def test_format_diagram(sig, diagram):
    assert format_diagram(diagram(("A", "B"), ("s", 0), ("g", 1))) == "A*B | s@0, g@1"
    assert format_diagram(identity(sig, ())) == "I |"


def test_format_diagram_with_hole_and_barrier(sig):
    ext = extend_with_holes(sig, [HoleSpec(in_type=("B",), out_type=("B",), slot_label=0)])
    d = make_diagram(ext, ("A", "B"), [Slice.gen("s", 0), Slice.hole(0, 1), Slice.barrier()])
    assert format_diagram(d) == "A*B | s@0, hole(B,B,0)@1, barrier"


def test_dict_codec(sig, diagram):
    d = diagram(("A",), ("h", 0), ("f", 1))
    data = diagram_to_dict(d)
    assert data["cod"] == ["A", "A"]
    assert data["slices"][1] == {"kind": "gen", "name": "f", "offset": 1}
    assert diagram_from_dict(data, sig) == d


def test_dict_codec_rejects_wrong_codomain(sig):
    with pytest.raises(DiagramError):
        diagram_from_dict({"dom": ["A"], "slices": [], "cod": ["B"]}, sig)


def test_dict_codec_rejects_unknown_kind(sig):
    with pytest.raises(DiagramError):
        diagram_from_dict({"dom": ["A"], "slices": [{"kind": "box"}]}, sig)
