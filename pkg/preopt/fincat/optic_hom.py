"""
Optic hom-sets of a finite effectful category as explicit coends.

An optic (a, a') -> (b, b') is a class of (x, y, l, r) with
l: a -> x b y and r: x b' y -> a', where pure arrows on x and y slide
from r to l.
"""

import itertools
import logging
from typing import Any, Dict, List, Optional, Tuple

from ..config import get_settings
from .category import Arrow, FinCat, Obj
from .coend import induced_bijection_check, induced_map, quotient
from .effectful import EffectfulCategory
from .monoidal import MonStructure
from .schemas import CheckResult, CoendResult

logger = logging.getLogger(__name__)

Boundary = Tuple[Obj, Obj]
Level = int


def _layer(eff: EffectfulCategory, level: Level) -> Tuple[FinCat, MonStructure, Any]:
    if level == 0:
        return eff.c0, eff.mon0, lambda h: h
    return eff.c1, eff.mon1, eff.j


def optic_hom_coend(
    eff: EffectfulCategory,
    source: Boundary,
    target: Boundary,
    level: Level = 1,
    budget: Optional[int] = None,
) -> CoendResult:
    """
    The optic hom from source (a, a') to target (b, b'), computed over C0
    at level 0 and over C1 at level 1. Indices are (x, y), values (l, r).
    """
    cat, mon, lift = _layer(eff, level)
    c0 = eff.c0
    (a, a2), (b, b2) = source, target
    objs = c0.objects
    ten = mon.ten

    elements = [
        ((x, y), (l, r))
        for x in objs
        for y in objs
        for l in cat.hom(a, ten(x, b, y))
        for r in cat.hom(ten(x, b2, y), a2)
    ]
    relations = []
    for h in c0.sorted_arrows:
        s, t = c0.arrows[h]
        jh = lift(h)
        for y in objs:
            # h on the left residual
            slide_fwd = mon.rwhisker(jh, ten(b, y))
            slide_bwd = mon.rwhisker(jh, ten(b2, y))
            for l in cat.hom(a, ten(s, b, y)):
                for r in cat.hom(ten(t, b2, y), a2):
                    relations.append(
                        (((s, y), (l, cat.compose(r, slide_bwd))), ((t, y), (cat.compose(slide_fwd, l), r)))
                    )
        for x in objs:
            # h on the right residual
            slide_fwd = mon.lwhisker(ten(x, b), jh)
            slide_bwd = mon.lwhisker(ten(x, b2), jh)
            for l in cat.hom(a, ten(x, b, s)):
                for r in cat.hom(ten(x, b2, t), a2):
                    relations.append(
                        (((x, s), (l, cat.compose(r, slide_bwd))), ((x, t), (cat.compose(slide_fwd, l), r)))
                    )
    result = quotient(elements, relations, budget)
    logger.debug(f"Optic hom {source} -> {target} at level {level}: {len(result)} classes")
    return result


def optic_hom_map(
    eff: EffectfulCategory, source: Boundary, target: Boundary, budget: Optional[int] = None
) -> Tuple[Dict[Any, Any], CheckResult]:
    """The map from pure to effectful optics applying J to both halves."""
    pure = optic_hom_coend(eff, source, target, 0, budget)
    effectful = optic_hom_coend(eff, source, target, 1, budget)
    j = eff.j

    def image(member):
        (x, y), (l, r) = member
        return effectful.cls((x, y), (j(l), j(r)))

    return induced_map(pure, image)


def optic_hom_compose(
    eff: EffectfulCategory, first: Any, second: Any, level: Level = 1
) -> Tuple[Tuple[Obj, Obj], Tuple[Arrow, Arrow]]:
    """
    Compose raw elements: `first` (a, a') -> (b, b') then `second`
    (b, b') -> (c, c'). The residuals nest as x x' and y' y.
    """
    cat, mon, _ = _layer(eff, level)
    ten = mon.ten
    (x, y), (l, r) = first
    (x2, y2), (l2, r2) = second
    fwd = cat.compose(mon.rwhisker(mon.lwhisker(x, l2), y), l)
    bwd = cat.compose(r, mon.rwhisker(mon.lwhisker(x, r2), y))
    return (ten(x, x2), ten(y2, y)), (fwd, bwd)


def optic_identity(eff: EffectfulCategory, boundary: Boundary, level: Level = 1):
    cat, mon, _ = _layer(eff, level)
    a, a2 = boundary
    return (mon.unit, mon.unit), (cat.id(a), cat.id(a2))


def optic_category_check(
    eff: EffectfulCategory,
    boundaries: Optional[List[Boundary]] = None,
    level: Level = 1,
    budget: Optional[int] = None,
) -> CheckResult:
    """
    Composition of optic classes is well defined, associative and unital on
    every triple of the given boundaries (all pairs of objects by default).
    """
    budget = get_settings().resolve_budget(budget)
    objs = eff.c0.objects
    if boundaries is None:
        boundaries = [(a, a2) for a in objs for a2 in objs]
    homs = {
        (s, t): optic_hom_coend(eff, s, t, level, budget)
        for s in boundaries
        for t in boundaries
    }

    def compose(s, m, t, first, second):
        member = optic_hom_compose(eff, first, second, level)
        return homs[(s, t)].cls(*member)

    for s, m, t in itertools.product(boundaries, repeat=3):
        for rep1, members1 in homs[(s, m)].classes.items():
            for rep2, members2 in homs[(m, t)].classes.items():
                image = compose(s, m, t, rep1, rep2)
                for other in members1:
                    if compose(s, m, t, other, rep2) != image:
                        return CheckResult.failed("well_defined", side="first", member=other, second=rep2)
                for other in members2:
                    if compose(s, m, t, rep1, other) != image:
                        return CheckResult.failed("well_defined", side="second", first=rep1, member=other)

    for s, t in itertools.product(boundaries, repeat=2):
        for rep in homs[(s, t)].classes:
            left = homs[(s, t)].cls(*optic_hom_compose(eff, optic_identity(eff, s, level), rep, level))
            right = homs[(s, t)].cls(*optic_hom_compose(eff, rep, optic_identity(eff, t, level), level))
            if left != rep or right != rep:
                return CheckResult.failed("unit", source=s, target=t, optic=rep)

    for s, m1, m2, t in itertools.product(boundaries, repeat=4):
        for r1 in homs[(s, m1)].classes:
            for r2 in homs[(m1, m2)].classes:
                first = homs[(s, m2)].cls(*optic_hom_compose(eff, r1, r2, level))
                for r3 in homs[(m2, t)].classes:
                    lhs = homs[(s, t)].cls(*optic_hom_compose(eff, first, r3, level))
                    inner = homs[(m1, t)].cls(*optic_hom_compose(eff, r2, r3, level))
                    rhs = homs[(s, t)].cls(*optic_hom_compose(eff, r1, inner, level))
                    if lhs != rhs:
                        return CheckResult.failed("associativity", first=r1, second=r2, third=r3)
    return CheckResult.passed("optic_category")


def horizontal_tensor_two_ways(
    eff: EffectfulCategory,
    outer: Boundary,
    a: Boundary,
    b: Boundary,
    budget: Optional[int] = None,
) -> CheckResult:
    """
    Compare two presentations of the two-hole comb set around (a, a') and
    (b, b') inside (c, c'):

    nested: coend over d, d' in C0 of C1(c, d) x P(d, d') x C1(d', c'), where
        P(d, d') = coend over x, y, z of C0(d, x a y b z) x C0(x a' y b' z, d')
    direct: coend over x, y, z of C1(c, x a y b z) x C1(x a' y b' z, c')

    The comparison [d, d', k, x, y, z, p, q, k'] -> [x, y, z, J(p) k, k' J(q)]
    must be well defined and bijective.
    """
    budget = get_settings().resolve_budget(budget)
    c0, c1, mon0, mon1, j = eff.c0, eff.c1, eff.mon0, eff.mon1, eff.j
    objs = c0.objects
    c, c2 = outer
    (a1, a2), (b1, b2) = a, b

    def fwd(mon, x, y, z):
        return mon.ten(x, a1, y, b1, z)

    def bwd(mon, x, y, z):
        return mon.ten(x, a2, y, b2, z)

    def slides(mon, lift, x, y, z):
        """(index after sliding, forward whisker, backward whisker) per residual arrow."""
        for h in c0.sorted_arrows:
            s, t = c0.arrows[h]
            jh = lift(h)
            if s == x:
                yield (t, y, z), mon.rwhisker(jh, mon.ten(a1, y, b1, z)), mon.rwhisker(jh, mon.ten(a2, y, b2, z))
            if s == y:
                yield (
                    (x, t, z),
                    mon.rwhisker(mon.lwhisker(mon.ten(x, a1), jh), mon.ten(b1, z)),
                    mon.rwhisker(mon.lwhisker(mon.ten(x, a2), jh), mon.ten(b2, z)),
                )
            if s == z:
                yield (x, y, t), mon.lwhisker(mon.ten(x, a1, y, b1), jh), mon.lwhisker(mon.ten(x, a2, y, b2), jh)

    triples = list(itertools.product(objs, repeat=3))

    direct_elements = [
        ((x, y, z), (l, r))
        for x, y, z in triples
        for l in c1.hom(c, fwd(mon1, x, y, z))
        for r in c1.hom(bwd(mon1, x, y, z), c2)
    ]
    direct_relations = []
    for x, y, z in triples:
        for moved, sf, sb in slides(mon1, j, x, y, z):
            for l in c1.hom(c, fwd(mon1, x, y, z)):
                for r in c1.hom(bwd(mon1, *moved), c2):
                    direct_relations.append(
                        (((x, y, z), (l, c1.compose(r, sb))), (moved, (c1.compose(sf, l), r)))
                    )
    direct = quotient(direct_elements, direct_relations, budget)

    nested_elements = []
    nested_relations = []
    for d, d2 in itertools.product(objs, repeat=2):
        for x, y, z in triples:
            for k in c1.hom(c, d):
                for p in c0.hom(d, fwd(mon0, x, y, z)):
                    for q in c0.hom(bwd(mon0, x, y, z), d2):
                        for k2 in c1.hom(d2, c2):
                            nested_elements.append(((), (d, d2, k, x, y, z, p, q, k2)))
            # pure arrows slide through the residuals of P
            for moved, sf, sb in slides(mon0, lambda h: h, x, y, z):
                for k in c1.hom(c, d):
                    for p in c0.hom(d, fwd(mon0, x, y, z)):
                        for q in c0.hom(bwd(mon0, *moved), d2):
                            for k2 in c1.hom(d2, c2):
                                nested_relations.append(
                                    (
                                        ((), (d, d2, k, x, y, z, p, c0.compose(q, sb), k2)),
                                        ((), (d, d2, k, *moved, c0.compose(sf, p), q, k2)),
                                    )
                                )
    for u in c0.sorted_arrows:
        s, t = c0.arrows[u]
        for x, y, z in triples:
            # u: s -> t between the outer hom and P(d, -)
            for d2 in objs:
                for k in c1.hom(c, s):
                    for p in c0.hom(t, fwd(mon0, x, y, z)):
                        for q in c0.hom(bwd(mon0, x, y, z), d2):
                            for k2 in c1.hom(d2, c2):
                                nested_relations.append(
                                    (
                                        ((), (s, d2, k, x, y, z, c0.compose(p, u), q, k2)),
                                        ((), (t, d2, c1.compose(j(u), k), x, y, z, p, q, k2)),
                                    )
                                )
            # ... and between P(-, d') and the outer hom
            for d in objs:
                for k in c1.hom(c, d):
                    for p in c0.hom(d, fwd(mon0, x, y, z)):
                        for q in c0.hom(bwd(mon0, x, y, z), s):
                            for k2 in c1.hom(t, c2):
                                nested_relations.append(
                                    (
                                        ((), (d, s, k, x, y, z, p, q, c1.compose(k2, j(u)))),
                                        ((), (d, t, k, x, y, z, p, c0.compose(u, q), k2)),
                                    )
                                )
    nested = quotient(nested_elements, nested_relations, budget)
    logger.debug(f"Two-hole combs: {len(nested)} nested classes, {len(direct)} direct classes")

    def compare(member):
        d, d2, k, x, y, z, p, q, k2 = member[1]
        return direct.cls((x, y, z), (c1.compose(j(p), k), c1.compose(k2, j(q))))

    return induced_bijection_check(nested, compare, direct.classes, "horizontal_tensor")

