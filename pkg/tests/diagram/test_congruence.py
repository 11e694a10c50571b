import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preopt.cli import parse_diagram
from preopt.constants import SliceKinds, SwapCases
from preopt.diagram import (
    ClassBudgetExceededError,
    NotSwappableError,
    Slice,
    enumerate_class,
    equal,
    exact_normal_form,
    greedy_is_exact,
    greedy_normal_form,
    make_diagram,
    normal_form,
    swap_adjacent,
    swap_moves,
)
from preopt.laws.generators import make_rng, random_class_member, random_diagram
from preopt.signature import Generator, declare_signature, running_signature


def test_swap_central_with_disjoint_slice(diagram):
    d = diagram(("A", "B"), ("h", 0), ("g", 2))
    swapped = swap_adjacent(d, 0)
    assert swapped.slices == (Slice.gen("g", 1), Slice.gen("h", 0))
    assert swapped.cod == d.cod


def test_non_central_pair_is_not_swappable(diagram):
    with pytest.raises(NotSwappableError):
        swap_adjacent(diagram(("A", "B"), ("f", 0), ("g", 1)), 0)


def test_overlapping_slices_are_not_swappable(diagram):
    with pytest.raises(NotSwappableError):
        swap_adjacent(diagram(("A",), ("s", 0), ("s", 0)), 0)


def test_swap_index_out_of_range(diagram):
    with pytest.raises(NotSwappableError):
        swap_adjacent(diagram(("A",), ("s", 0)), 0)


def test_swap_with_unavailable_case_raises(diagram):
    d = diagram(("A", "B"), ("s", 0), ("g", 1))
    assert swap_adjacent(d, 0, case=SwapCases.RIGHT).slices == (Slice.gen("g", 1), Slice.gen("s", 0))
    with pytest.raises(NotSwappableError):
        swap_adjacent(d, 0, case=SwapCases.LEFT)


@pytest.mark.parametrize(
    "pairs",
    [
        [("s", 0), ("g", 1)],
        [("g", 1), ("s", 0)],
        [("h", 0), ("g", 2)],
        [("f", 0), ("c", 1)],
    ],
)
def test_swapping_twice_restores_the_diagram(diagram, pairs):
    d = diagram(("A", "B"), *pairs)
    assert swap_adjacent(swap_adjacent(d, 0), 0) == d


def test_zero_width_swaps_are_undone_by_the_reverse_swap():
    sig = declare_signature(
        ["A"],
        [
            Generator(name="u", dom=(), cod=("A",), central=True),
            Generator(name="d", dom=("A",), cod=(), central=True),
        ],
    )
    d = make_diagram(sig, ("A",), [Slice.gen("d", 0), Slice.gen("u", 0)])
    results = swap_moves(d, 0)
    assert {r.slices for r in results} == {
        (Slice.gen("u", 0), Slice.gen("d", 1)),
        (Slice.gen("u", 1), Slice.gen("d", 0)),
    }
    for r in results:
        assert swap_adjacent(r, 0) == d


def test_class_of_interchangeable_pair(diagram):
    d = diagram(("A", "B"), ("g", 1), ("s", 0))
    members = enumerate_class(d)
    assert len(members) == 2
    assert all(m.cod == d.cod for m in members)


def test_class_of_non_central_pair_is_singleton(diagram):
    assert len(enumerate_class(diagram(("A", "B"), ("f", 0), ("g", 1)))) == 1


def test_three_disjoint_central_slices_have_six_orders(diagram):
    members = enumerate_class(diagram(("A", "B", "A"), ("s", 0), ("c", 1), ("s", 2)))
    assert len(members) == 6
    assert len({m.slices for m in members}) == 6


def test_slices_never_cross_a_hole_on_shared_wires(sig):
    comb = parse_diagram("A*B | s@0, hole(A,A,0)@0, c@1, s@0", sig)
    members = enumerate_class(comb.under)
    assert len(members) == 4
    for m in members:
        around = [(s.kind, s.offset) for s in m.slices if s.name != "c"]
        assert around == [(SliceKinds.GEN, 0), (SliceKinds.HOLE, 0), (SliceKinds.GEN, 0)]


def test_a_hole_over_every_wire_blocks_all_swaps(sig):
    comb = parse_diagram("A*B | s@0, hole(A*B,A*B,0)@0, c@1", sig)
    assert enumerate_class(comb.under) == {comb.under}


def test_class_budget(diagram):
    d = diagram(("A", "B"), ("s", 0), ("c", 1), ("s", 0))
    with pytest.raises(ClassBudgetExceededError):
        enumerate_class(d, budget=1)


def test_class_budget_from_environment(monkeypatch, diagram):
    monkeypatch.setenv("PREOPT_BUDGET", "1")
    with pytest.raises(ClassBudgetExceededError):
        enumerate_class(diagram(("A", "B"), ("s", 0), ("g", 1)))


def test_normal_form_prefers_low_offsets(diagram):
    d = diagram(("A", "B"), ("g", 1), ("s", 0))
    assert normal_form(d).slices == (Slice.gen("s", 0), Slice.gen("g", 1))


def test_equal_decides_interchange(diagram):
    assert equal(diagram(("A", "B"), ("s", 0), ("g", 1)), diagram(("A", "B"), ("g", 1), ("s", 0)))
    assert not equal(diagram(("A", "B"), ("f", 0), ("g", 1)), diagram(("A", "B"), ("g", 1), ("f", 0)))


def test_equal_on_different_boundaries(diagram):
    assert not equal(diagram(("A",), ("s", 0)), diagram(("B",), ("c", 0)))


def test_equal_needs_the_same_multiset(diagram):
    assert not equal(diagram(("A",), ("s", 0)), diagram(("A",), ("f", 0)))


def test_zero_width_generators_fall_back_to_exact():
    sig = declare_signature(
        ["A"],
        [
            Generator(name="u", dom=(), cod=("A",), central=True),
            Generator(name="d", dom=("A",), cod=(), central=True),
        ],
    )
    d = make_diagram(sig, ("A",), [Slice.gen("d", 0), Slice.gen("u", 0)])
    assert not greedy_is_exact(d)
    nf = normal_form(d)
    assert nf.slices == exact_normal_form(d).slices
    assert nf in enumerate_class(d)


def test_greedy_is_exact_on_running_signature(diagram):
    assert greedy_is_exact(diagram(("A", "B"), ("h", 0), ("g", 2), ("c", 2)))


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_greedy_matches_exact_normal_form(seed):
    rng = make_rng(seed)
    d = random_diagram(rng, running_signature(), ("A", "B"), max_slices=5)
    assert greedy_normal_form(d).slices == exact_normal_form(d).slices


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_class_members_are_equal_and_share_normal_form(seed):
    rng = make_rng(seed)
    d = random_diagram(rng, running_signature(), ("A", "B", "A"), max_slices=5)
    other = random_class_member(rng, d)
    assert equal(d, other)
    assert normal_form(d).slices == normal_form(other).slices
    assert normal_form(normal_form(d)).slices == normal_form(d).slices
