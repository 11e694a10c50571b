from hypothesis import given, settings
from hypothesis import strategies as st

from preopt.diagram import equal
from preopt.laws import (
    make_rng,
    mutate_centrality,
    random_class_member,
    random_diagram,
    random_horizontal,
    random_optic_chain,
    random_word,
)
from preopt.optic import substitute
from preopt.signature import running_signature

SIG = running_signature()
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_same_seed_same_diagram(sig):
    d1 = random_diagram(make_rng(7), sig, ("A", "B"))
    d2 = random_diagram(make_rng(7), sig, ("A", "B"))
    assert d1 == d2


def test_random_word_length(sig):
    rng = make_rng(1)
    for _ in range(20):
        w = random_word(rng, sig, 2, 3)
        assert 2 <= len(w) <= 3
        assert set(w) <= {"A", "B"}


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_random_diagram_respects_bounds(seed):
    d = random_diagram(make_rng(seed), SIG, ("A", "B"), max_slices=4, max_width=4)
    assert len(d) <= 4
    assert all(len(level) <= 4 for level in d.levels)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_class_member_is_equal(seed):
    rng = make_rng(seed)
    d = random_diagram(rng, SIG, ("A", "B"), max_slices=4)
    assert equal(d, random_class_member(rng, d))


def test_mutate_centrality_flips_one_slice(diagram):
    d = diagram(("A", "B"), ("s", 0), ("g", 1))
    mutated = mutate_centrality(make_rng(0), d)
    assert mutated is not None
    assert mutated.dom == d.dom and mutated.cod == d.cod
    assert sorted(s.name for s in mutated.slices) in (["f", "g"], ["c", "s"])


def test_mutate_centrality_without_siblings(diagram):
    assert mutate_centrality(make_rng(0), diagram(("A",), ("h", 0))) is None


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_optic_chain_links_up(seed):
    o1, o2, o3 = random_optic_chain(make_rng(seed), SIG, ("A", "B"), 3)
    assert o1.dst == o2.src
    assert o2.dst == o3.src
    assert substitute(substitute(o1, 0, o2), 0, o3).src == o1.src


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_random_horizontal_fills_fit(seed):
    drawn = random_horizontal(make_rng(seed), SIG)
    if drawn is None:
        return
    comb, fills = drawn
    assert comb.slots == [0, 1]
    for slot, fill in fills.items():
        assert fill.dom == comb.hole(slot).in_type
        assert len(fill) == 1
