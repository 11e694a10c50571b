import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preopt.cli import DslSyntaxError, format_signature, parse_diagram, parse_signature
from preopt.diagram import Diagram, TypeMismatchError, format_diagram
from preopt.laws.generators import make_rng, random_diagram
from preopt.optic import Comb, Optic
from preopt.signature import DuplicateNameError, UndeclaredAtomError, running_signature

SIGNATURE_TEXT = """
# running signature
atoms A B ;
gen s : A -> A central ;
gen f : A -> A ;
gen h : A -> A*A central ;
gen u : I -> A ;
"""


def test_parse_signature():
    sig = parse_signature(SIGNATURE_TEXT)
    assert sig.atoms == ("A", "B")
    assert sig.generator("s").central
    assert not sig.generator("f").central
    assert sig.generator("h").cod == ("A", "A")
    assert sig.generator("u").dom == ()


def test_format_signature_parses_back():
    sig = running_signature()
    assert parse_signature(format_signature(sig)) == sig


def test_signature_syntax_error_carries_position():
    with pytest.raises(DslSyntaxError) as exc_info:
        parse_signature("gen s : A ->")
    assert exc_info.value.span == (1, 11)
    assert exc_info.value.to_dict()["error"] == "SyntaxError"


def test_duplicate_atom_position():
    with pytest.raises(DuplicateNameError) as exc_info:
        parse_signature("atoms A A ;")
    assert exc_info.value.span == (1, 9)


def test_duplicate_generator():
    with pytest.raises(DuplicateNameError):
        parse_signature("atoms A ;\ngen s : A -> A ;\ngen s : A -> A ;")


def test_undeclared_atom_position():
    with pytest.raises(UndeclaredAtomError) as exc_info:
        parse_signature("atoms A ;\ngen f : A -> B ;")
    assert exc_info.value.span == (2, 14)


def test_parse_plain_diagram(sig):
    d = parse_diagram("A*B | s@0, g@1", sig)
    assert isinstance(d, Diagram)
    assert d.dom == ("A", "B")
    assert [(s.name, s.offset) for s in d.slices] == [("s", 0), ("g", 1)]


def test_parse_identity_on_unit(sig):
    d = parse_diagram("I |", sig)
    assert isinstance(d, Diagram)
    assert d.dom == () and len(d) == 0


def test_comments_are_ignored(sig):
    d = parse_diagram("A | s@0  # central\n", sig)
    assert len(d) == 1


def test_one_hole_gives_an_optic(sig):
    o = parse_diagram("A*B | s@0, hole(B,B,0)@1", sig)
    assert isinstance(o, Optic)
    assert o.slots == [0]


def test_two_holes_give_a_comb(sig):
    k = parse_diagram("A*B | hole(A,A,0)@0, barrier, hole(B,B,1)@1", sig)
    assert isinstance(k, Comb)
    assert not isinstance(k, Optic)
    assert k.slots == [0, 1]


def test_type_mismatch_points_at_the_slice(sig):
    with pytest.raises(TypeMismatchError) as exc_info:
        parse_diagram("A | g@0", sig)
    assert exc_info.value.index == 0
    assert exc_info.value.span == (1, 5)


def test_undeclared_atom_in_diagram(sig):
    with pytest.raises(UndeclaredAtomError):
        parse_diagram("C |", sig)


def test_hole_slot_reused_with_another_type(sig):
    with pytest.raises(DuplicateNameError):
        parse_diagram("A*B | hole(A,A,0)@0, hole(B,B,0)@1", sig)


@pytest.mark.parametrize("text", ["A | s@", "A s@0", "A | s@0,", "| s@0", "A | s@0 $"])
def test_malformed_diagrams(sig, text):
    with pytest.raises(DslSyntaxError) as exc_info:
        parse_diagram(text, sig)
    assert exc_info.value.span is not None


@pytest.mark.parametrize(
    "text",
    [
        "A*B | s@0, g@1",
        "I |",
        "A | h@0, f@1, s@0",
        "A*B | s@0, hole(B,B,0)@1, barrier",
        "A*B | hole(A,A,0)@0, barrier, hole(B,I,1)@1",
    ],
)
def test_printed_literals_parse_back(sig, text):
    parsed = parse_diagram(text, sig)
    d = parsed if isinstance(parsed, Diagram) else parsed.under
    assert format_diagram(d) == text
    again = parse_diagram(format_diagram(d), sig)
    assert (again if isinstance(again, Diagram) else again.under) == d


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_random_diagrams_parse_back(seed):
    sig = running_signature()
    d = random_diagram(make_rng(seed), sig, ("A", "B"), max_slices=6)
    assert parse_diagram(format_diagram(d), sig) == d
