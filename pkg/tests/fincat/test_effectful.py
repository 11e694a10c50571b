import pytest

from preopt.fincat import (
    FinCatError,
    LawViolationError,
    check_effectful,
    check_mon_structure,
    cyclic_monoid,
    discrete_monoidal,
    interchange_witness,
    is_central_arrow,
    is_monoidal,
    left_zero_monoid,
    make_monoid,
    make_writer_effectful,
    resolve_example,
    walking_arrow_monoidal,
    writer_constant,
)


def test_left_zero_monoid_is_not_commutative():
    m3 = left_zero_monoid()
    assert m3.mul("a", "b") == "a"
    assert m3.mul("e", "b") == "b"
    assert not m3.is_commutative
    assert cyclic_monoid(3).is_commutative


def test_make_monoid_rejects_non_associative_table():
    table = {(1, 1): 2, (1, 2): 1, (2, 1): 2, (2, 2): 1}

    def mul(x, y):
        if x == 0:
            return y
        if y == 0:
            return x
        return table[(x, y)]

    with pytest.raises(LawViolationError) as exc:
        make_monoid([0, 1, 2], mul, 0)
    assert exc.value.law == "associativity"


def test_make_monoid_rejects_escaping_products():
    with pytest.raises(LawViolationError) as exc:
        make_monoid([0, 1], lambda x, y: x + y, 0)
    assert exc.value.law == "closure"


def test_monoidal_bases_are_monoidal():
    for mon in (walking_arrow_monoidal(), discrete_monoidal(3)):
        assert check_mon_structure(mon).ok
        assert is_monoidal(mon)


def test_writer_counts():
    eff = make_writer_effectful(left_zero_monoid())
    assert eff.c0.objects == (0, 1)
    assert len(eff.c0) == 3
    assert len(eff.c1) == 5
    assert check_effectful(eff).ok


def test_non_commutative_writer_is_premonoidal_only():
    eff = make_writer_effectful(left_zero_monoid())
    assert interchange_witness(eff.mon1) is not None
    assert interchange_witness(eff.mon0) is None
    assert not is_central_arrow(eff.mon1, writer_constant("a"))
    assert is_central_arrow(eff.mon1, eff.j(eff.c0.id(1)))


def test_commutative_writer_is_monoidal():
    eff = make_writer_effectful(cyclic_monoid(2))
    assert is_monoidal(eff.mon1)


def test_writer_universe_must_contain_the_unit():
    with pytest.raises(FinCatError):
        make_writer_effectful(cyclic_monoid(2), universe=[0, 2])


def test_writer_universe_must_be_closed():
    with pytest.raises(FinCatError):
        make_writer_effectful(cyclic_monoid(2), universe=[1, 2])


@pytest.mark.parametrize("name", ["writer:M3", "writer:Z2", "walking-arrow", "trivial", "discrete:3"])
def test_resolve_example(name):
    assert check_effectful(resolve_example(name)).ok


@pytest.mark.parametrize("name", ["writer:Q8", "discrete:0", "discrete:x", "nope"])
def test_resolve_unknown_example(name):
    with pytest.raises(FinCatError):
        resolve_example(name)
