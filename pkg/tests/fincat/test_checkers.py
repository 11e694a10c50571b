import pytest

from preopt.constants import Checks
from preopt.fincat import (
    FinCatError,
    canonical_prostrength,
    hom_profunctor,
    hom_v2,
    horizontal_tensor_two_ways,
    identity_comparison,
    identity_effectful,
    is_tight,
    lan_bijection_check,
    left_zero_monoid,
    left_proaction,
    make_writer_effectful,
    optic_hom_coend,
    proaction_square_check,
    promonad_from_ioo,
    promonad_table,
    prostrength_check,
    representable,
    resolve_checks,
    resolve_example,
    right_proaction,
    tambara_check,
    v2_coend,
    verify_effectful,
    walking_arrow_monoidal,
    whiskering_strengths,
)


@pytest.fixture
def writer():
    """The left-zero writer on the single set size 1."""
    return make_writer_effectful(left_zero_monoid(), universe=[1])


def _relabel(k, swap):
    n, m, imgs = k
    return (n, m, tuple((swap.get(label, label), y) for label, y in imgs))


@pytest.mark.parametrize("name", ["trivial", "walking-arrow", "discrete:2"])
def test_every_checker_passes_on_monoidal_examples(name):
    results = verify_effectful(resolve_example(name))
    assert list(results) == Checks.ALL_CHECKS
    assert all(result.ok for result in results.values())


def test_writer_passes_the_core_checks(writer):
    names = [Checks.CATEGORY, Checks.EFFECTFUL, Checks.PROMONAD, Checks.KLEISLI, Checks.COEND, Checks.OPTIC]
    results = verify_effectful(writer, names)
    assert all(result.ok for result in results.values())


def test_every_checker_passes_on_the_non_commutative_writer():
    results = verify_effectful(resolve_example("writer:M3"))
    assert list(results) == Checks.ALL_CHECKS
    failed = {name: result.to_dict() for name, result in results.items() if not result.ok}
    assert failed == {}


@pytest.mark.parametrize(
    "outer, a, b",
    [
        ((1, 1), (1, 1), (1, 1)),
        ((1, 1), (1, 0), (0, 1)),
        ((0, 1), (0, 1), (1, 1)),
        ((1, 0), (1, 1), (1, 0)),
    ],
)
def test_horizontal_presentations_agree_on_the_writer(outer, a, b):
    eff = resolve_example("writer:M3")
    result = horizontal_tensor_two_ways(eff, outer, a, b)
    assert result.ok, result.witness


def test_interchange_check_reports_a_witness():
    results = verify_effectful(resolve_example("writer:M3"), [Checks.INTERCHANGE])
    result = results[Checks.INTERCHANGE]
    assert result.ok
    assert result.witness


def test_resolve_checks():
    assert resolve_checks(["all"]) == Checks.ALL_CHECKS
    assert resolve_checks(["lan", "day"]) == ["lan", "day"]
    with pytest.raises(FinCatError):
        resolve_checks(["nope"])


def test_optic_hom_sizes(writer):
    assert len(optic_hom_coend(writer, (1, 1), (1, 1), level=1)) == 9
    assert len(optic_hom_coend(writer, (1, 1), (1, 1), level=0)) == 1


def test_hom_comparison_is_tight_only_for_identity():
    assert not is_tight(hom_v2(make_writer_effectful(left_zero_monoid(), universe=[1])))
    assert is_tight(hom_v2(identity_effectful(walking_arrow_monoidal())))


def test_effectful_coend_merges_non_commuting_labels(writer):
    result = v2_coend(hom_v2(writer))
    assert len(result.coend0) == 1
    assert len(result.coend1) == 2
    assert not result.is_bijective


def test_promonad_table_follows_the_monoid(writer):
    table = promonad_table(promonad_from_ioo(writer.j), 1)
    assert len(table) == 9
    a, b = (1, 1, (("a", 0),)), (1, 1, (("b", 0),))
    assert table[(a, b)] == a


def test_lan_bijection(writer):
    y = representable(writer.c0, 1)
    assert lan_bijection_check(writer.j, y, y).ok


def test_tambara_unit_violation_is_reported():
    eff = resolve_example("writer:Z2")
    hom1 = hom_profunctor(eff.c1)
    left, right = whiskering_strengths(hom1, eff.mon1)
    assert tambara_check(hom1, eff.mon1, eff.j, left, right).ok

    identity = eff.c1.id(1)
    left[(eff.mon1.unit, 1, 1, identity)] = _relabel(identity, {0: 1})
    result = tambara_check(hom1, eff.mon1, eff.j, left, right)
    assert not result.ok
    assert result.law == "unit"


def test_prostrength_unit_violation_is_reported(writer):
    strength = canonical_prostrength(writer)
    assert prostrength_check(writer, strength).ok

    pure_id = writer.c0.id(1)
    key = (1, 1, 1, 1, pure_id, writer.j(pure_id))
    strength[key] = _relabel(strength[key], {"e": "a"})
    result = prostrength_check(writer, strength)
    assert not result.ok
    assert result.law == "unit"


def test_proaction_squares_reject_a_non_natural_comparison(writer):
    def swapped(x, ab, k):
        return _relabel(k, {"e": "a", "a": "e"})

    p1l, p1r = left_proaction(writer), right_proaction(writer)
    assert proaction_square_check(writer, p1l, p1r, identity_comparison, identity_comparison).ok
    result = proaction_square_check(writer, p1l, p1r, swapped, identity_comparison)
    assert not result.ok
    assert result.law == "left_naturality"
