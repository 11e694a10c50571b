"""
The checker battery run by `fincat --verify` on an effectful category.
"""

import itertools
import logging
from typing import Callable, Dict, Iterable, Optional

from ..constants import Checks
from .category import check_fincat, identity_functor
from .closed import closure_check
from .coend import check_extranatural
from .day import day_assoc_check, day_unit, day_unit_check
from .effectful import EffectfulCategory, check_effectful
from .exceptions import FinCatError
from .kan import lan_bijection_check
from .monoidal import interchange_witness
from .optic_hom import horizontal_tensor_two_ways, optic_category_check, optic_hom_map
from .presheaf import representable
from .proaction import identity_comparison, left_proaction, proaction_square_check, right_proaction
from .profunctor import hom_profunctor
from .promonad import check_promonad, kleisli_bijection_check, promonad_from_ioo
from .schemas import CheckResult
from .tambara import (
    canonical_prostrength,
    promonoidal_check,
    prostrength_check,
    representable_promonoidal,
    tambara_check,
    whiskering_strengths,
)
from .v2 import hom_v2, v2_coend

logger = logging.getLogger(__name__)

Checker = Callable[[EffectfulCategory, Optional[int]], CheckResult]


def _first_failure(*results: CheckResult, law: str) -> CheckResult:
    for result in results:
        if not result.ok:
            return result
    return CheckResult.passed(law)


def _category(eff, budget):
    return _first_failure(check_fincat(eff.c0), check_fincat(eff.c1), law=Checks.CATEGORY)


def _effectful(eff, budget):
    return check_effectful(eff)


def _interchange(eff, budget):
    # informational: a witness is expected for non-commutative writers
    witness = interchange_witness(eff.mon1)
    return CheckResult(ok=True, law=Checks.INTERCHANGE, witness=witness or {})


def _promonad(eff, budget):
    return check_promonad(promonad_from_ioo(eff.j), budget)


def _kleisli(eff, budget):
    return kleisli_bijection_check(promonad_from_ioo(eff.j))


def _tambara(eff, budget):
    hom1 = hom_profunctor(eff.c1)
    t = promonad_from_ioo(eff.j).t
    return _first_failure(
        tambara_check(hom1, eff.mon1, eff.j, *whiskering_strengths(hom1, eff.mon1)),
        tambara_check(t, eff.mon0, identity_functor(eff.c0), *whiskering_strengths(t, eff.mon1)),
        law=Checks.TAMBARA,
    )


def _prostrength(eff, budget):
    return prostrength_check(eff, canonical_prostrength(eff))


def _promonoidal(eff, budget):
    return promonoidal_check(representable_promonoidal(eff.mon0), budget)


def _coend(eff, budget):
    v = hom_v2(eff)
    result = v2_coend(v, budget)
    return _first_failure(
        check_extranatural(v.p0, result.coend0),
        check_extranatural(v.p1, result.coend1),
        law=Checks.COEND,
    )


def _lan(eff, budget):
    results = [
        lan_bijection_check(eff.j, representable(eff.c0, a), representable(eff.c0, b), budget)
        for a in eff.c0.objects
        for b in eff.c0.objects
    ]
    return _first_failure(*results, law=Checks.LAN)


def _day(eff, budget):
    hom0 = hom_profunctor(eff.c0)
    return _first_failure(
        day_unit_check(hom0, eff.mon0, budget),
        day_assoc_check(hom0, hom0, hom0, eff.mon0, budget),
        day_assoc_check(hom0, day_unit(eff.mon0), hom0, eff.mon0, budget),
        law=Checks.DAY,
    )


def _optic(eff, budget):
    objs = eff.c0.objects
    maps = [
        optic_hom_map(eff, (a, a2), (b, b2), budget)[1]
        for a in objs
        for a2 in objs
        for b in objs
        for b2 in objs
    ]
    return _first_failure(*maps, optic_category_check(eff, budget=budget), law=Checks.OPTIC)


def _horizontal(eff, budget):
    boundaries = list(itertools.product(eff.c0.objects, repeat=2))
    for outer, a, b in itertools.product(boundaries, repeat=3):
        result = horizontal_tensor_two_ways(eff, outer, a, b, budget)
        if not result.ok:
            return result
    return CheckResult.passed(Checks.HORIZONTAL)


def _proaction(eff, budget):
    return proaction_square_check(
        eff, left_proaction(eff), right_proaction(eff), identity_comparison, identity_comparison
    )


def _closure(eff, budget):
    i = eff.mon0.unit
    f = representable(eff.c0, i)
    g = representable(eff.c1, i)
    return closure_check(f, g, g, eff, budget)


CHECKERS: Dict[str, Checker] = {
    Checks.CATEGORY: _category,
    Checks.EFFECTFUL: _effectful,
    Checks.INTERCHANGE: _interchange,
    Checks.PROMONAD: _promonad,
    Checks.KLEISLI: _kleisli,
    Checks.TAMBARA: _tambara,
    Checks.PROSTRENGTH: _prostrength,
    Checks.PROMONOIDAL: _promonoidal,
    Checks.COEND: _coend,
    Checks.LAN: _lan,
    Checks.DAY: _day,
    Checks.OPTIC: _optic,
    Checks.HORIZONTAL: _horizontal,
    Checks.PROACTION: _proaction,
    Checks.CLOSURE: _closure,
}


def resolve_checks(names: Iterable[str]) -> list:
    """
    Raises:
        FinCatError: a name is not a known checker
    """
    selected = []
    for name in names:
        if name == Checks.ALL:
            return list(Checks.ALL_CHECKS)
        if name not in CHECKERS:
            raise FinCatError(f"Unknown check {name!r}; expected one of {Checks.ALL_CHECKS + [Checks.ALL]}")
        selected.append(name)
    return selected


def verify_effectful(
    eff: EffectfulCategory, names: Iterable[str] = (Checks.ALL,), budget: Optional[int] = None
) -> Dict[str, CheckResult]:
    results = {}
    for name in resolve_checks(names):
        results[name] = CHECKERS[name](eff, budget)
        logger.info(f"{eff.name}: {name} {'passed' if results[name].ok else 'FAILED'}")
    return results
