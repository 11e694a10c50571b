import pytest

from preopt.fincat import (
    LawViolationError,
    SizeExceededError,
    check_extranatural,
    coend,
    compose_profunctors,
    constant_profunctor,
    discrete_category,
    end_,
    factor_through_coend,
    hom_profunctor,
    make_profunctor,
    quotient,
    walking_arrow,
)


@pytest.fixture
def arrow():
    return walking_arrow()


def test_coend_of_walking_arrow_hom(arrow):
    p = hom_profunctor(arrow)
    result = coend(p)
    assert len(result) == 2
    assert check_extranatural(p, result).ok


def test_coend_of_discrete_hom():
    assert len(coend(hom_profunctor(discrete_category(3)))) == 3


def test_coend_of_constant_profunctor_glues_along_the_arrow(arrow):
    p = constant_profunctor(arrow, arrow, [0, 1])
    result = coend(p)
    assert len(result) == 2
    assert result.cls(0, 1) == result.cls(1, 1)


def test_factor_through_coend(arrow):
    p = constant_profunctor(arrow, arrow, [0, 1])
    result = coend(p)
    factor = factor_through_coend(p, result, {0: {0: "x", 1: "y"}, 1: {0: "x", 1: "y"}})
    assert sorted(factor.values()) == ["x", "y"]


def test_factor_through_coend_rejects_a_non_cowedge(arrow):
    p = constant_profunctor(arrow, arrow, [0, 1])
    with pytest.raises(LawViolationError) as exc:
        factor_through_coend(p, coend(p), {0: {0: 0, 1: 1}, 1: {0: 0, 1: 0}})
    assert exc.value.law == "extranaturality"


def test_end_of_walking_arrow_hom(arrow):
    assert len(end_(hom_profunctor(arrow))) == 1


def test_end_of_discrete_constant():
    d = discrete_category(2)
    assert len(end_(constant_profunctor(d, d, [0, 1]))) == 4


def test_end_over_budget():
    d = discrete_category(3)
    with pytest.raises(SizeExceededError):
        end_(constant_profunctor(d, d, [0, 1]), budget=3)


def test_quotient_over_budget():
    with pytest.raises(SizeExceededError):
        quotient([(0, "a"), (0, "b"), (0, "c")], [], budget=2)


def test_quotient_representatives_are_least_members():
    result = quotient([(0, "b"), (0, "a"), (1, "c")], [((0, "b"), (0, "a"))])
    assert result.representatives == [(0, "a"), (1, "c")]
    assert result.cls(0, "b") == (0, "a")


def test_composite_with_hom_is_hom(arrow):
    h = hom_profunctor(arrow)
    assert compose_profunctors(h, h).sizes() == h.sizes()


def test_make_profunctor_validates_actions(arrow):
    with pytest.raises(LawViolationError) as exc:
        make_profunctor(
            arrow,
            arrow,
            value=lambda d, c: (0, 1),
            lact=lambda u, c, x: 1 - x,
            ract=lambda v, d, x: x,
        )
    assert exc.value.law == "identity"
