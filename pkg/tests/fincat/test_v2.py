import pytest

from preopt.fincat import (
    LawViolationError,
    check_v2,
    constant_profunctor,
    hom_profunctor,
    hom_v2,
    identity_effectful,
    identity_v2,
    is_tight,
    left_zero_monoid,
    make_v2,
    make_writer_effectful,
    restriction_v2,
    v2_coend,
    v2_compose,
    walking_arrow_monoidal,
)


@pytest.fixture
def eff():
    return identity_effectful(walking_arrow_monoidal())


def test_identity_v2_is_tight(eff):
    hom = hom_profunctor(eff.c0)
    v = identity_v2(hom)
    assert all(v.eta[(d, c, x)] == x for d, c, x in hom.elements())
    assert check_v2(v).ok
    assert is_tight(v)
    assert v2_coend(v).is_bijective


def test_two_tight_compose_to_tight(eff):
    v = hom_v2(eff)
    assert is_tight(v)
    composite = v2_compose(v, v)
    assert check_v2(composite).ok
    assert is_tight(composite)
    assert composite.p0.sizes() == composite.p1.sizes()


def test_identity_v2_composites_stay_tight(eff):
    pair = identity_v2(constant_profunctor(eff.c0, eff.c0, ["x", "y"]))
    hom = identity_v2(hom_profunctor(eff.c0))
    assert is_tight(v2_compose(pair, hom))
    assert is_tight(v2_compose(hom, pair))


def test_restriction_along_a_writer_is_tight():
    writer = make_writer_effectful(left_zero_monoid(), universe=[1])
    hom1 = hom_profunctor(writer.c1)
    v = restriction_v2(hom1, writer.j, writer.j)
    assert check_v2(v).ok
    assert is_tight(v)
    assert v.p0.src == writer.c0
    assert v.p0.value(1, 1) == hom1.value(1, 1)
    assert not is_tight(hom_v2(writer))


def test_make_v2_rejects_a_non_natural_comparison(eff):
    pair = constant_profunctor(eff.c0, eff.c0, ["x", "y"])
    swap = {"x": "y", "y": "x"}
    with pytest.raises(LawViolationError) as exc_info:
        make_v2(eff.j, eff.j, pair, pair, lambda d, c, x: swap[x] if c == 1 else x)
    assert exc_info.value.exit_code == 1
