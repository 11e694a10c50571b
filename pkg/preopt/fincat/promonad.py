"""
The promonad T = C1(J-, J=) of an identity-on-objects functor and its
Kleisli category.
"""

import logging
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict

from .category import Arrow, FinCat, IooFunctor, Obj, category_from_functions, check_functor
from .coend import compose_profunctors
from .profunctor import (
    FinProfunctor,
    check_natural,
    hom_profunctor,
    induced_transformation,
    make_profunctor,
)
from .schemas import CheckResult

logger = logging.getLogger(__name__)


class Promonad(BaseModel):
    """An endo-profunctor on C0 with multiplication through C1 and unit J."""

    model_config = ConfigDict(frozen=True)

    j: IooFunctor
    t: FinProfunctor

    @property
    def c0(self) -> FinCat:
        return self.j.src

    @property
    def c1(self) -> FinCat:
        return self.j.dst

    def mult(self, member: Any) -> Arrow:
        """[b, y, x] with y: d -> b and x: b -> c goes to x after y."""
        _, y, x = member
        return self.c1.compose(x, y)

    def unit(self, u: Arrow) -> Arrow:
        return self.j(u)


def promonad_from_ioo(j: IooFunctor) -> Promonad:
    c1 = j.dst
    t = make_profunctor(
        j.src,
        j.src,
        value=c1.hom,
        lact=lambda u, _, x: c1.compose(x, j(u)),
        ract=lambda v, _, x: c1.compose(j(v), x),
        name=f"T({c1.name})",
    )
    return Promonad(j=j, t=t)


def check_promonad(pm: Promonad, budget: Optional[int] = None) -> CheckResult:
    """
    mu: T.T => T and eta: hom => T are well defined and natural; mu is
    associative and unital on elements.
    """
    t, c0 = pm.t, pm.c0
    tt = compose_profunctors(t, t, budget)
    mu, result = induced_transformation(tt, lambda d, c, m: pm.mult(m))
    if not result.ok:
        return result
    result = check_natural(tt, t, mu)
    if not result.ok:
        return CheckResult.failed("multiplication_" + result.law, **result.witness)
    hom0 = hom_profunctor(c0)
    result = check_natural(hom0, t, {(d, c, u): pm.unit(u) for d, c, u in hom0.elements()})
    if not result.ok:
        return CheckResult.failed("unit_" + result.law, **result.witness)

    for d, b, y in t.elements():
        for u in c0.sorted_arrows:
            if c0.cod(u) == d and pm.mult((d, pm.unit(u), y)) != t.lact(u, b, y):
                return CheckResult.failed("left_unit", u=u, x=y)
        for v in c0.arrows_from(b):
            if pm.mult((b, y, pm.unit(v))) != t.ract(v, d, y):
                return CheckResult.failed("right_unit", v=v, x=y)
        for b2 in c0.objects:
            for x in t.value(b, b2):
                for c in c0.objects:
                    for z in t.value(b2, c):
                        left = pm.mult((b2, pm.mult((b, y, x)), z))
                        right = pm.mult((b, y, pm.mult((b2, x, z))))
                        if left != right:
                            return CheckResult.failed("associativity", first=y, second=x, third=z)
    return CheckResult.passed("promonad")


def kleisli_category(pm: Promonad) -> FinCat:
    """Arrows (d, c, x) with x in T(d, c); composition through mu."""
    t, c0 = pm.t, pm.c0
    homs = {(d, c): [(d, c, x) for x in t.value(d, c)] for d in c0.objects for c in c0.objects}
    return category_from_functions(
        c0.objects,
        homs,
        compose=lambda g, f: (f[0], g[1], pm.mult((f[1], f[2], g[2]))),
        identity=lambda a: (a, a, pm.unit(c0.id(a))),
        name=f"Kl({t.name})",
    )


def kleisli_bijection_check(pm: Promonad) -> CheckResult:
    """(d, c, x) -> x is a bijection on every hom and a functor Kl(T) -> C1."""
    kl = kleisli_category(pm)
    c1 = pm.c1
    arrow_map = {f: f[2] for f in kl.arrows}
    for d in kl.objects:
        for c in kl.objects:
            images = [arrow_map[f] for f in kl.hom(d, c)]
            if len(set(images)) != len(images) or set(images) != set(c1.hom(d, c)):
                return CheckResult.failed("hom_bijection", d=d, c=c)
    result = check_functor(IooFunctor(src=kl, dst=c1, arrow_map=arrow_map))
    if not result.ok:
        return result
    return CheckResult.passed("kleisli")


def promonad_table(pm: Promonad, a: Obj):
    """The multiplication table of T(a, a), keyed by element pairs."""
    elements = pm.t.value(a, a)
    return {(x, y): pm.mult((a, x, y)) for x in elements for y in elements}
