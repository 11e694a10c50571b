"""
The canonical proactions of C0 on itself and their extensions to C1, with
a checker for the squares relating them.
"""

import logging
from typing import Any, Callable

from .category import Obj, product_category
from .effectful import EffectfulCategory
from .profunctor import FinProfunctor, make_profunctor, natural_iso_check
from .schemas import CheckResult

logger = logging.getLogger(__name__)

Comparison = Callable[[Obj, Any, Any], Any]


def pure_proaction(eff: EffectfulCategory) -> FinProfunctor:
    """C0(x, a b) from C0 x C0 to C0."""
    c0, mon = eff.c0, eff.mon0
    return make_profunctor(
        product_category(c0, c0),
        c0,
        value=lambda x, ab: c0.hom(x, mon.tensor[ab]),
        lact=lambda w, ab, k: c0.compose(k, w),
        ract=lambda hv, x, k: c0.then(
            k, mon.lwhisker(c0.dom(hv[0]), hv[1]), mon.rwhisker(hv[0], c0.cod(hv[1]))
        ),
        name="P0",
        validate=False,
    )


def left_proaction(eff: EffectfulCategory) -> FinProfunctor:
    """C1(x, a b) from C0 x C1 to C1, the pure factor acting through J."""
    c0, c1, mon, j = eff.c0, eff.c1, eff.mon1, eff.j
    return make_profunctor(
        product_category(c0, c1),
        c1,
        value=lambda x, ab: c1.hom(x, mon.tensor[ab]),
        lact=lambda w, ab, k: c1.compose(k, w),
        ract=lambda hv, x, k: c1.then(
            k, mon.lwhisker(c0.dom(hv[0]), hv[1]), mon.rwhisker(j(hv[0]), c1.cod(hv[1]))
        ),
        name="P1L",
        validate=False,
    )


def right_proaction(eff: EffectfulCategory) -> FinProfunctor:
    """C1(x, b a) from C1 x C0 to C1."""
    c0, c1, mon, j = eff.c0, eff.c1, eff.mon1, eff.j
    return make_profunctor(
        product_category(c1, c0),
        c1,
        value=lambda x, ba: c1.hom(x, mon.tensor[ba]),
        lact=lambda w, ba, k: c1.compose(k, w),
        ract=lambda vh, x, k: c1.then(
            k, mon.rwhisker(vh[0], c0.dom(vh[1])), mon.lwhisker(c1.cod(vh[0]), j(vh[1]))
        ),
        name="P1R",
        validate=False,
    )


def _restriction_square(
    eff: EffectfulCategory, p1: FinProfunctor, cmp: Comparison, side: str
) -> CheckResult:
    """J carries the pure proaction into p1 compatibly with both actions."""
    pure = pure_proaction(eff)
    c0, j = eff.c0, eff.j

    def lift(hv):
        return (hv[0], j(hv[1])) if side == "left" else (j(hv[0]), hv[1])

    for x, ab, k in pure.elements():
        image = cmp(x, ab, j(k))
        for w in c0.sorted_arrows:
            if c0.cod(w) == x and p1.lact(j(w), ab, image) != cmp(c0.dom(w), ab, j(pure.lact(w, ab, k))):
                return CheckResult.failed(f"{side}_square", variable="x", w=w, k=k)
        for hv in pure.src.arrows_from(ab):
            target = pure.src.cod(hv)
            if p1.ract(lift(hv), x, image) != cmp(x, target, j(pure.ract(hv, x, k))):
                return CheckResult.failed(f"{side}_square", variable="ab", arrow=hv, k=k)
    return CheckResult.passed(f"{side}_square")


def proaction_square_check(
    eff: EffectfulCategory,
    p1l: FinProfunctor,
    p1r: FinProfunctor,
    cmp_l: Comparison,
    cmp_r: Comparison,
) -> CheckResult:
    """
    The supplied extensions p1l, p1r of the pure proaction agree with the
    canonical ones through cmp_l, cmp_r (natural bijections), and both
    restriction squares along J commute elementwise.
    """
    result = natural_iso_check(left_proaction(eff), p1l, cmp_l)
    if not result.ok:
        return CheckResult.failed("left_" + result.law, **result.witness)
    result = natural_iso_check(right_proaction(eff), p1r, cmp_r)
    if not result.ok:
        return CheckResult.failed("right_" + result.law, **result.witness)
    for p1, cmp, side in ((p1l, cmp_l, "left"), (p1r, cmp_r, "right")):
        result = _restriction_square(eff, p1, cmp, side)
        if not result.ok:
            return result
    return CheckResult.passed("proaction_squares")


def identity_comparison(x: Obj, ab: Any, k: Any) -> Any:
    return k
