"""
The left-closed structure on presheaves over an effectful category: the
tensor F (x) G through C1(c, a d) and its right adjoint [G, -].
"""

import logging
from typing import Dict, Optional

from ..config import get_settings
from ..infra.enumeration import enumerate_families
from ..infra.union_find import canonical_key
from .category import Obj
from .coend import quotient
from .effectful import EffectfulCategory
from .exceptions import SizeExceededError
from .presheaf import FinPresheaf, freeze, make_presheaf, nat_transformations
from .schemas import CheckResult, CoendResult

logger = logging.getLogger(__name__)


def presheaf_tensor(
    f: FinPresheaf, g: FinPresheaf, eff: EffectfulCategory, budget: Optional[int] = None
) -> FinPresheaf:
    """
    (F (x) G)(c) = coend over a in C0, d in C1 of C1(c, a d) x F(a) x G(d),
    for F on C0 and G on C1.
    """
    c0, c1, mon, j = eff.c0, eff.c1, eff.mon1, eff.j
    ten = mon.tensor
    budget = get_settings().resolve_budget(budget)
    quotients: Dict[Obj, CoendResult] = {}
    for c in c1.objects:
        elements = [
            (c, (a, d, k, x, y))
            for a in c0.objects
            for d in c1.objects
            for k in c1.hom(c, ten[(a, d)])
            for x in f.value(a)
            for y in g.value(d)
        ]
        relations = [
            ((c, (a2, d, k, f.act(h, x), y)), (c, (a, d, c1.compose(mon.rwhisker(j(h), d), k), x, y)))
            for h in c0.sorted_arrows
            for a2, a in [c0.arrows[h]]
            for d in c1.objects
            for k in c1.hom(c, ten[(a2, d)])
            for x in f.value(a)
            for y in g.value(d)
        ] + [
            ((c, (a, d2, k, x, g.act(u, y))), (c, (a, d, c1.compose(mon.lwhisker(a, u), k), x, y)))
            for u in c1.sorted_arrows
            for d2, d in [c1.arrows[u]]
            for a in c0.objects
            for k in c1.hom(c, ten[(a, d2)])
            for x in f.value(a)
            for y in g.value(d)
        ]
        quotients[c] = quotient(elements, relations, budget)

    def cls(c, raw):
        return quotients[c].cls(c, raw)[1]

    return make_presheaf(
        c1,
        value=lambda c: sorted((rep[1] for rep in quotients[c].classes), key=canonical_key),
        act=lambda w, e: cls(c1.dom(w), (e[0], e[1], c1.compose(e[2], w), e[3], e[4])),
        members={
            (c, rep[1]): tuple(m[1] for m in ms)
            for c, result in quotients.items()
            for rep, ms in result.classes.items()
        },
        name=f"({f.name}(x){g.name})",
        validate=False,
    )


def closed_hom(
    g: FinPresheaf, h: FinPresheaf, eff: EffectfulCategory, budget: Optional[int] = None
) -> FinPresheaf:
    """
    [G, H](a) = end over d of Set(G(d), H(a d)): families phi with
    phi(d', G(u) y) = H(a . u)(phi(d, y)) for u: d' -> d in C1.

    Raises:
        SizeExceededError: an end exceeds the budget
    """
    c0, c1, mon, j = eff.c0, eff.c1, eff.mon1, eff.j
    ten = mon.tensor
    limit = get_settings().resolve_budget(budget)
    values = {}
    for a in c0.objects:
        components = {(d, y): h.value(ten[(a, d)]) for d in c1.objects for y in g.value(d)}
        constraints = [
            (
                ((d, y), (d2, g.act(u, y))),
                lambda s, u=u, d=d, y=y, d2=d2, a=a: s[(d2, g.act(u, y))]
                == h.act(mon.lwhisker(a, u), s[(d, y)]),
            )
            for u in c1.sorted_arrows
            for d2, d in [c1.arrows[u]]
            for y in g.value(d)
        ]
        families = enumerate_families(components, constraints, limit, SizeExceededError)
        values[a] = sorted((freeze(phi) for phi in families), key=canonical_key)
        logger.debug(f"[{g.name}, {h.name}]({a}) has {len(values[a])} elements")

    def act(w, phi):
        return freeze({(d, y): h.act(mon.rwhisker(j(w), d), z) for (d, y), z in phi})

    return make_presheaf(c0, value=values.__getitem__, act=act, name=f"[{g.name},{h.name}]", validate=False)


def closure_check(
    f: FinPresheaf,
    g: FinPresheaf,
    h: FinPresheaf,
    eff: EffectfulCategory,
    budget: Optional[int] = None,
) -> CheckResult:
    """
    Currying alpha -> (a, x) -> {(d, y): alpha([a, d, id, x, y])} is a
    bijection Nat(F (x) G, H) -> Nat(F, [G, H]).
    """
    ten = eff.mon1.tensor
    c1 = eff.c1
    tensor = presheaf_tensor(f, g, eff, budget)
    hom = closed_hom(g, h, eff, budget)
    lhs = nat_transformations(tensor, h, budget)
    rhs = {freeze(beta) for beta in nat_transformations(f, hom, budget)}

    def curry(alpha):
        out = {}
        for a, x in f.elements():
            phi = {}
            for d in c1.objects:
                ad = ten[(a, d)]
                for y in g.value(d):
                    phi[(d, y)] = alpha[(ad, tensor.cls(ad, (a, d, c1.id(ad), x, y)))]
            out[(a, x)] = freeze(phi)
        return freeze(out)

    curried = set()
    for alpha in lhs:
        image = curry(alpha)
        if image not in rhs:
            return CheckResult.failed("naturality", alpha=freeze(alpha))
        if image in curried:
            return CheckResult.failed("injectivity", alpha=freeze(alpha))
        curried.add(image)
    if len(curried) != len(rhs):
        return CheckResult.failed("surjectivity", lhs=len(lhs), rhs=len(rhs))
    return CheckResult.passed("closure")
