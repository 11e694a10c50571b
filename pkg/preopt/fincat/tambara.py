"""
Strength checkers: Tambara modules over a monoidal action, prostrong
promonads, and the representable promonoidal structure of a monoidal base.
"""

import logging
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ..config import get_settings
from .category import IooFunctor, Obj
from .coend import induced_bijection_check, quotient
from .effectful import EffectfulCategory
from .monoidal import MonStructure
from .profunctor import FinProfunctor
from .schemas import CheckResult

logger = logging.getLogger(__name__)

Strength = Dict[Tuple[Obj, Obj, Obj, Any], Any]


def whiskering_strengths(p: FinProfunctor, mon: MonStructure) -> Tuple[Strength, Strength]:
    """
    Strengths x -> a . x and x -> x . a for a profunctor whose elements are
    arrows of mon.category.
    """
    left: Strength = {}
    right: Strength = {}
    for a in mon.category.objects:
        for d, c, x in p.elements():
            left[(a, d, c, x)] = mon.lwhisker(a, x)
            right[(a, d, c, x)] = mon.rwhisker(x, a)
    return left, right


def tambara_check(
    p: FinProfunctor,
    mon: MonStructure,
    acting: IooFunctor,
    left: Strength,
    right: Strength,
) -> CheckResult:
    """
    Check that (left, right) make P a Tambara module for the action of
    acting.src on P's category.

    left[(a, d, c, x)] lies in P(a d, a c) and right[(a, d, c, x)] in
    P(d a, c a). Checked in order: typing, unit, associativity, left/right
    compatibility, naturality in d and c, dinaturality in a.
    """
    cat = p.src
    acts = acting.src.objects
    ten = mon.tensor
    i = mon.unit

    for a in acts:
        for d, c, x in p.elements():
            if left.get((a, d, c, x)) not in p.value(ten[(a, d)], ten[(a, c)]):
                return CheckResult.failed("typing", side="left", a=a, d=d, c=c, x=x)
            if right.get((a, d, c, x)) not in p.value(ten[(d, a)], ten[(c, a)]):
                return CheckResult.failed("typing", side="right", a=a, d=d, c=c, x=x)

    for d, c, x in p.elements():
        if left[(i, d, c, x)] != x:
            return CheckResult.failed("unit", side="left", d=d, c=c, x=x)
        if right[(i, d, c, x)] != x:
            return CheckResult.failed("unit", side="right", d=d, c=c, x=x)

    for a in acts:
        for b in acts:
            ab = ten[(a, b)]
            for d, c, x in p.elements():
                inner = left[(b, d, c, x)]
                if left[(a, ten[(b, d)], ten[(b, c)], inner)] != left[(ab, d, c, x)]:
                    return CheckResult.failed("associativity", side="left", a=a, b=b, x=x)
                inner = right[(a, d, c, x)]
                if right[(b, ten[(d, a)], ten[(c, a)], inner)] != right[(ab, d, c, x)]:
                    return CheckResult.failed("associativity", side="right", a=a, b=b, x=x)
                lr = left[(a, ten[(d, b)], ten[(c, b)], right[(b, d, c, x)])]
                rl = right[(b, ten[(a, d)], ten[(a, c)], left[(a, d, c, x)])]
                if lr != rl:
                    return CheckResult.failed("compatibility", a=a, b=b, x=x)

    for a in acts:
        for d, c, x in p.elements():
            lx, rx = left[(a, d, c, x)], right[(a, d, c, x)]
            for u in cat.sorted_arrows:
                if cat.cod(u) != d:
                    continue
                d2 = cat.dom(u)
                y = p.lact(u, c, x)
                if left[(a, d2, c, y)] != p.lact(mon.lwhisker(a, u), ten[(a, c)], lx):
                    return CheckResult.failed("naturality", side="left", variable="d", a=a, u=u, x=x)
                if right[(a, d2, c, y)] != p.lact(mon.rwhisker(u, a), ten[(c, a)], rx):
                    return CheckResult.failed("naturality", side="right", variable="d", a=a, u=u, x=x)
            for v in cat.arrows_from(c):
                c2 = cat.cod(v)
                y = p.ract(v, d, x)
                if left[(a, d, c2, y)] != p.ract(mon.lwhisker(a, v), ten[(a, d)], lx):
                    return CheckResult.failed("naturality", side="left", variable="c", a=a, v=v, x=x)
                if right[(a, d, c2, y)] != p.ract(mon.rwhisker(v, a), ten[(d, a)], rx):
                    return CheckResult.failed("naturality", side="right", variable="c", a=a, v=v, x=x)

    for h in acting.src.sorted_arrows:
        a, a2 = acting.src.arrows[h]
        jh = acting(h)
        for d, c, x in p.elements():
            lhs = p.lact(mon.rwhisker(jh, d), ten[(a2, c)], left[(a2, d, c, x)])
            rhs = p.ract(mon.rwhisker(jh, c), ten[(a, d)], left[(a, d, c, x)])
            if lhs != rhs:
                return CheckResult.failed("dinaturality", side="left", h=h, x=x)
            lhs = p.lact(mon.lwhisker(d, jh), ten[(c, a2)], right[(a2, d, c, x)])
            rhs = p.ract(mon.lwhisker(c, jh), ten[(d, a)], right[(a, d, c, x)])
            if lhs != rhs:
                return CheckResult.failed("dinaturality", side="right", h=h, x=x)
    return CheckResult.passed("tambara")


ProStrength = Dict[Tuple[Obj, Obj, Obj, Obj, Any, Any], Any]


def canonical_prostrength(eff: EffectfulCategory) -> ProStrength:
    """
    s(x, a, b, c, p, t) = (a . t) after J(p) for p: x -> a c in C0 and
    t: c -> b in C1.
    """
    c0, c1, mon0, mon1 = eff.c0, eff.c1, eff.mon0, eff.mon1
    strength: ProStrength = {}
    for x in c0.objects:
        for a in c0.objects:
            for b in c0.objects:
                for c in c0.objects:
                    for p in c0.hom(x, mon0.tensor[(a, c)]):
                        for t in c1.hom(c, b):
                            strength[(x, a, b, c, p, t)] = c1.compose(mon1.lwhisker(a, t), eff.j(p))
    return strength


def prostrength_check(eff: EffectfulCategory, strength: ProStrength) -> CheckResult:
    """
    Check a prostrength for the promonad C1(J-, J=) over the representable
    promonoidal structure C0(x, a b).

    Checked in order: typing, descent through the coend over c, naturality
    in x and b, compatibility with the unit, compatibility with the
    multiplication.
    """
    c0, c1, mon0, j = eff.c0, eff.c1, eff.mon0, eff.j
    ten = mon0.tensor
    objs = c0.objects

    def s(x, a, b, c, p, t):
        return strength[(x, a, b, c, p, t)]

    keys = [
        (x, a, b, c, p, t)
        for x in objs
        for a in objs
        for b in objs
        for c in objs
        for p in c0.hom(x, ten[(a, c)])
        for t in c1.hom(c, b)
    ]
    for key in keys:
        x, a, b = key[:3]
        if strength.get(key) not in c1.hom(x, ten[(a, b)]):
            return CheckResult.failed("typing", instance=key)

    for x, a, b, c, p, t in keys:
        for u in c0.arrows_from(c):
            c2 = c0.cod(u)
            for t2 in c1.hom(c2, b):
                if t != c1.compose(t2, j(u)):
                    continue
                moved = c0.compose(mon0.lwhisker(a, u), p)
                if s(x, a, b, c, p, t) != s(x, a, b, c2, moved, t2):
                    return CheckResult.failed("well_defined", x=x, a=a, b=b, u=u, p=p, t=t2)

    for x, a, b, c, p, t in keys:
        value = s(x, a, b, c, p, t)
        for w in c0.sorted_arrows:
            if c0.cod(w) != x:
                continue
            x2 = c0.dom(w)
            if s(x2, a, b, c, c0.compose(p, w), t) != c1.compose(value, j(w)):
                return CheckResult.failed("naturality", variable="x", w=w, p=p, t=t)
        for v in c0.arrows_from(b):
            b2 = c0.cod(v)
            if s(x, a, b2, c, p, c1.compose(j(v), t)) != c1.compose(j(mon0.lwhisker(a, v)), value):
                return CheckResult.failed("naturality", variable="b", v=v, p=p, t=t)

    for x, a, b, c, p, t in keys:
        for v in c0.hom(c, b):
            if t == j(v) and s(x, a, b, c, p, t) != j(c0.compose(mon0.lwhisker(a, v), p)):
                return CheckResult.failed("unit", x=x, a=a, b=b, p=p, v=v)

    for x, a, b, c, p, t1 in keys:
        # t1: c -> b continued by t2: b -> e
        for e in objs:
            for t2 in c1.hom(b, e):
                lhs = s(x, a, e, c, p, c1.compose(t2, t1))
                ab = ten[(a, b)]
                rhs = c1.compose(s(ab, a, e, b, c0.id(ab), t2), s(x, a, b, c, p, t1))
                if lhs != rhs:
                    return CheckResult.failed("multiplication", x=x, a=a, p=p, t1=t1, t2=t2)
    logger.debug(f"Prostrength verified on {len(keys)} instances")
    return CheckResult.passed("prostrength")


class Promonoidal(BaseModel):
    """P(x; a, b) and I(x) of a promonoidal structure, by value sets."""

    model_config = ConfigDict(frozen=True)

    mon: MonStructure
    tensor_values: Dict[Tuple[Obj, Obj, Obj], Tuple[Any, ...]] = {}
    unit_values: Dict[Obj, Tuple[Any, ...]] = {}


def representable_promonoidal(mon: MonStructure) -> Promonoidal:
    """P(x; a, b) = C(x, a b) and I(x) = C(x, i)."""
    c = mon.category
    objs = c.objects
    return Promonoidal(
        mon=mon,
        tensor_values={
            (x, a, b): c.hom(x, mon.tensor[(a, b)]) for x in objs for a in objs for b in objs
        },
        unit_values={x: c.hom(x, mon.unit) for x in objs},
    )


def promonoidal_check(pro: Promonoidal, budget: Optional[int] = None) -> CheckResult:
    """
    The associativity and unit comparisons of a representable promonoidal
    structure descend to the coends and are bijective:

        coend_e P(x; a, e) x P(e; b, c)  ->  C(x, a b c)  <-  coend_e P(x; e, c) x P(e; a, b)
        coend_e P(x; e, a) x I(e)        ->  C(x, a)      <-  coend_e P(x; a, e) x I(e)
    """
    mon = pro.mon
    cat = mon.category
    budget = get_settings().resolve_budget(budget)
    objs = cat.objects
    ten, pv, iv = mon.tensor, pro.tensor_values, pro.unit_values

    for x in objs:
        for a in objs:
            for b in objs:
                for c in objs:
                    abc = mon.ten(a, b, c)
                    # right bracketing: p: x -> a e, q: e -> b c
                    right = quotient(
                        [((x,), (e, p, q)) for e in objs for p in pv[(x, a, e)] for q in pv[(e, b, c)]],
                        [
                            (((x,), (e, p, cat.compose(q, u))), ((x,), (e2, cat.compose(mon.lwhisker(a, u), p), q)))
                            for u in cat.sorted_arrows
                            for e, e2 in [cat.arrows[u]]
                            for p in pv[(x, a, e)]
                            for q in pv[(e2, b, c)]
                        ],
                        budget,
                    )
                    result = induced_bijection_check(
                        right,
                        lambda m, a=a: cat.compose(mon.lwhisker(a, m[1][2]), m[1][1]),
                        cat.hom(x, abc),
                        "associativity",
                    )
                    if not result.ok:
                        return CheckResult.failed("associativity", bracket="right", x=x, a=a, b=b, c=c, **result.witness)
                    left = quotient(
                        [((x,), (e, p, q)) for e in objs for p in pv[(x, e, c)] for q in pv[(e, a, b)]],
                        [
                            (((x,), (e, p, cat.compose(q, u))), ((x,), (e2, cat.compose(mon.rwhisker(u, c), p), q)))
                            for u in cat.sorted_arrows
                            for e, e2 in [cat.arrows[u]]
                            for p in pv[(x, e, c)]
                            for q in pv[(e2, a, b)]
                        ],
                        budget,
                    )
                    result = induced_bijection_check(
                        left,
                        lambda m, c=c: cat.compose(mon.rwhisker(m[1][2], c), m[1][1]),
                        cat.hom(x, abc),
                        "associativity",
                    )
                    if not result.ok:
                        return CheckResult.failed("associativity", bracket="left", x=x, a=a, b=b, c=c, **result.witness)

    for x in objs:
        for a in objs:
            for side in ("left", "right"):
                if side == "left":
                    values = lambda e: pv[(x, e, a)]  # noqa: E731
                    whisker = lambda f: mon.rwhisker(f, a)  # noqa: E731
                else:
                    values = lambda e: pv[(x, a, e)]  # noqa: E731
                    whisker = lambda f: mon.lwhisker(a, f)  # noqa: E731
                q = quotient(
                    [((x,), (e, p, k)) for e in objs for p in values(e) for k in iv[e]],
                    [
                        (((x,), (e, p, cat.compose(k, u))), ((x,), (e2, cat.compose(whisker(u), p), k)))
                        for u in cat.sorted_arrows
                        for e, e2 in [cat.arrows[u]]
                        for p in values(e)
                        for k in iv[e2]
                    ],
                    budget,
                )
                result = induced_bijection_check(
                    q,
                    lambda m: cat.compose(whisker(m[1][2]), m[1][1]),
                    cat.hom(x, a),
                    "unit",
                )
                if not result.ok:
                    return CheckResult.failed("unit", side=side, x=x, a=a, **result.witness)
    return CheckResult.passed("promonoidal")
