"""
Day convolution of endo-profunctors over a monoidal finite category.

    (P * Q)(d, c) = coend over a, a', b, b' of
        C(d, a a') x P(a, b) x Q(a', b') x C(b b', c)
"""

import logging
from typing import Any, Callable, Dict, Optional, Tuple

from ..config import get_settings
from ..infra.union_find import canonical_key
from .category import Obj
from .coend import quotient
from .exceptions import LawViolationError
from .monoidal import MonStructure, is_monoidal
from .profunctor import FinProfunctor, make_profunctor, natural_iso_check
from .schemas import CheckResult, CoendResult

logger = logging.getLogger(__name__)


def _raw_elements(p: FinProfunctor, q: FinProfunctor, mon: MonStructure, d: Obj, c: Obj):
    cat = mon.category
    objs = cat.objects
    for a in objs:
        for a2 in objs:
            for k in cat.hom(d, mon.tensor[(a, a2)]):
                for b in objs:
                    for b2 in objs:
                        for l in cat.hom(mon.tensor[(b, b2)], c):
                            for x in p.value(a, b):
                                for y in q.value(a2, b2):
                                    yield (a, a2, b, b2, k, x, y, l)


def _relations(p: FinProfunctor, q: FinProfunctor, mon: MonStructure, d: Obj, c: Obj):
    cat = mon.category
    objs = cat.objects
    ten = mon.tensor
    idx = (d, c)
    for u in cat.sorted_arrows:
        s, t = cat.arrows[u]
        for other in objs:
            # u slides from the hom on the left into the contravariant slot of P
            for k in cat.hom(d, ten[(s, other)]):
                for b in objs:
                    for b2 in objs:
                        for l in cat.hom(ten[(b, b2)], c):
                            for x in p.value(t, b):
                                for y in q.value(other, b2):
                                    yield (
                                        (idx, (s, other, b, b2, k, p.lact(u, b, x), y, l)),
                                        (idx, (t, other, b, b2, cat.compose(mon.rwhisker(u, other), k), x, y, l)),
                                    )
            # ... and into the contravariant slot of Q
            for k in cat.hom(d, ten[(other, s)]):
                for b in objs:
                    for b2 in objs:
                        for l in cat.hom(ten[(b, b2)], c):
                            for x in p.value(other, b):
                                for y in q.value(t, b2):
                                    yield (
                                        (idx, (other, s, b, b2, k, x, q.lact(u, b2, y), l)),
                                        (idx, (other, t, b, b2, cat.compose(mon.lwhisker(other, u), k), x, y, l)),
                                    )
            # u slides from the covariant slot of P into the hom on the right
            for a in objs:
                for a2 in objs:
                    for k in cat.hom(d, ten[(a, a2)]):
                        for l in cat.hom(ten[(t, other)], c):
                            for x in p.value(a, s):
                                for y in q.value(a2, other):
                                    yield (
                                        (idx, (a, a2, s, other, k, x, y, cat.compose(l, mon.rwhisker(u, other)))),
                                        (idx, (a, a2, t, other, k, p.ract(u, a, x), y, l)),
                                    )
                        for l in cat.hom(ten[(other, t)], c):
                            for x in p.value(a, other):
                                for y in q.value(a2, s):
                                    yield (
                                        (idx, (a, a2, other, s, k, x, y, cat.compose(l, mon.lwhisker(other, u)))),
                                        (idx, (a, a2, other, t, k, x, q.ract(u, a2, y), l)),
                                    )


def day_convolve(
    p: FinProfunctor, q: FinProfunctor, mon: MonStructure, budget: Optional[int] = None
) -> FinProfunctor:
    """
    Raises:
        LawViolationError: the base is not monoidal
        SizeExceededError: a pointwise coend exceeds the budget
    """
    if not is_monoidal(mon):
        raise LawViolationError("Day convolution needs a monoidal base", law="monoidal_base")
    budget = get_settings().resolve_budget(budget)
    cat = mon.category
    quotients: Dict[Tuple[Obj, Obj], CoendResult] = {}
    for d in cat.objects:
        for c in cat.objects:
            quotients[(d, c)] = quotient(
                (((d, c), e) for e in _raw_elements(p, q, mon, d, c)),
                _relations(p, q, mon, d, c),
                budget,
            )

    def cls(d, c, raw):
        return quotients[(d, c)].cls((d, c), raw)[1]

    def lact(w, c, e):
        a, a2, b, b2, k, x, y, l = e
        return cls(cat.dom(w), c, (a, a2, b, b2, cat.compose(k, w), x, y, l))

    def ract(w, d, e):
        a, a2, b, b2, k, x, y, l = e
        return cls(d, cat.cod(w), (a, a2, b, b2, k, x, y, cat.compose(w, l)))

    members = {
        (d, c, rep[1]): tuple(m[1] for m in ms)
        for (d, c), result in quotients.items()
        for rep, ms in result.classes.items()
    }
    logger.debug(
        f"Day convolution {p.name} * {q.name}: "
        f"{sum(len(r) for r in quotients.values())} classes over {len(quotients)} pairs"
    )
    return make_profunctor(
        cat,
        cat,
        value=lambda d, c: sorted((rep[1] for rep in quotients[(d, c)].classes), key=canonical_key),
        lact=lact,
        ract=ract,
        members=members,
        name=f"({p.name}*{q.name})",
        validate=False,
    )


def day_unit(mon: MonStructure) -> FinProfunctor:
    """C(d, i) x C(i, c)."""
    cat = mon.category
    i = mon.unit
    return make_profunctor(
        cat,
        cat,
        value=lambda d, c: [(k, l) for k in cat.hom(d, i) for l in cat.hom(i, c)],
        lact=lambda w, c, e: (cat.compose(e[0], w), e[1]),
        ract=lambda w, d, e: (e[0], cat.compose(w, e[1])),
        name="I",
        validate=False,
    )


def day_unit_check(p: FinProfunctor, mon: MonStructure, budget: Optional[int] = None) -> CheckResult:
    """I * P and P * I are naturally isomorphic to P by the co-Yoneda maps."""
    cat = mon.category
    unit = day_unit(mon)

    def from_left(d, c, e):
        a, a2, b, b2, k, (k0, l0), y, l = e
        inner = p.lact(cat.compose(mon.rwhisker(k0, a2), k), b2, y)
        return p.ract(cat.compose(l, mon.rwhisker(l0, b2)), d, inner)

    def from_right(d, c, e):
        a, a2, b, b2, k, x, (k0, l0), l = e
        inner = p.lact(cat.compose(mon.lwhisker(a, k0), k), b, x)
        return p.ract(cat.compose(l, mon.lwhisker(b, l0)), d, inner)

    result = natural_iso_check(day_convolve(unit, p, mon, budget), p, from_left)
    if not result.ok:
        return CheckResult.failed("left_unit_" + result.law, **result.witness)
    result = natural_iso_check(day_convolve(p, unit, mon, budget), p, from_right)
    if not result.ok:
        return CheckResult.failed("right_unit_" + result.law, **result.witness)
    return CheckResult.passed("day_unit")


def day_associator(
    p: FinProfunctor,
    q: FinProfunctor,
    r: FinProfunctor,
    mon: MonStructure,
    budget: Optional[int] = None,
) -> Tuple[FinProfunctor, FinProfunctor, Callable[[Obj, Obj, Any], Any]]:
    """
    (P * Q) * R, P * (Q * R) and the re-bracketing map between them.

    A raw element [k, [k1, x, y, l1], z, l] goes to [(k1 ⋊ a2) k, x, [y, z], l (l1 ⋊ b2)],
    the inner pair [y, z] joined by identities.
    """
    cat = mon.category
    pq = day_convolve(p, q, mon, budget)
    qr = day_convolve(q, r, mon, budget)
    left = day_convolve(pq, r, mon, budget)
    right = day_convolve(p, qr, mon, budget)

    def rebracket(d, c, e):
        a, a2, b, b2, k, inner, z, l = e
        a1, a12, b1, b12, k1, x, y, l1 = inner
        mid_in, mid_out = mon.tensor[(a12, a2)], mon.tensor[(b12, b2)]
        yz = qr.cls(mid_in, mid_out, (a12, a2, b12, b2, cat.id(mid_in), y, z, cat.id(mid_out)))
        raw = (
            a1,
            mid_in,
            b1,
            mid_out,
            cat.compose(mon.rwhisker(k1, a2), k),
            x,
            yz,
            cat.compose(l, mon.rwhisker(l1, b2)),
        )
        return right.cls(d, c, raw)

    return left, right, rebracket


def day_assoc_check(
    p: FinProfunctor,
    q: FinProfunctor,
    r: FinProfunctor,
    mon: MonStructure,
    budget: Optional[int] = None,
) -> CheckResult:
    """The re-bracketing map (P * Q) * R => P * (Q * R) is a well-defined natural bijection."""
    left, right, rebracket = day_associator(p, q, r, mon, budget)
    result = natural_iso_check(left, right, rebracket)
    if not result.ok:
        return CheckResult.failed("associativity_" + result.law, **result.witness)
    return CheckResult.passed("day_associativity")
