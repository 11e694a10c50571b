from hypothesis import given
from hypothesis import strategies as st

from preopt.infra import UnionFind, find_orbits


def test_union_find_starts_with_singletons():
    uf = UnionFind([1, 2, 3])
    assert len(uf) == 3
    assert uf.classes() == {1: {1}, 2: {2}, 3: {3}}


def test_union_merges_and_reports_change():
    uf = UnionFind(["a", "b", "c"])
    assert uf.union("a", "b") is True
    assert uf.union("b", "a") is False
    assert uf.find("a") == uf.find("b")
    assert uf.find("c") != uf.find("a")


def test_add_is_idempotent():
    uf = UnionFind()
    uf.add("x")
    uf.union("x", "x")
    uf.add("x")
    assert "x" in uf
    assert len(uf) == 1


def test_representative_is_least_member_regardless_of_union_order():
    first = UnionFind([3, 1, 2])
    first.union(3, 2)
    first.union(2, 1)
    second = UnionFind([1, 2, 3])
    second.union(1, 2)
    second.union(1, 3)
    assert first.classes() == second.classes() == {1: {1, 2, 3}}


@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=20))
def test_classes_partition_the_elements(pairs):
    uf = UnionFind(range(10))
    for x, y in pairs:
        uf.union(x, y)
    classes = uf.classes()
    members = [x for group in classes.values() for x in group]
    assert sorted(members) == list(range(10))
    for x, y in pairs:
        assert uf.find(x) == uf.find(y)


def test_find_orbits_of_a_partial_action():
    orbits = find_orbits(["succ"], range(4), lambda g, x: x + 1 if x < 2 else None)
    assert orbits == {0: {0, 1, 2}, 3: {3}}
