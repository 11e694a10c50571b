"""
Left Kan extension of presheaves along an identity-on-objects functor, and
the bijection between transformations into the restricted extension and
transformations between extensions.
"""

import logging
from typing import Dict, Optional

from ..config import get_settings
from ..infra.union_find import canonical_key
from .category import IooFunctor, Obj
from .coend import quotient
from .presheaf import FinPresheaf, freeze, make_presheaf, nat_transformations, restrict_presheaf
from .schemas import CheckResult, CoendResult

logger = logging.getLogger(__name__)


def lan_extend(f: FinPresheaf, j: IooFunctor, budget: Optional[int] = None) -> FinPresheaf:
    """
    (Lan F)(c) = coend over x of C1(c, J x) x F(x).

    Elements are representatives (x, k, y); (x', k, F(h) y) ~ (x, J(h) k, y)
    for h: x' -> x in C0.
    """
    c0, c1 = j.src, j.dst
    budget = get_settings().resolve_budget(budget)
    quotients: Dict[Obj, CoendResult] = {}
    for c in c1.objects:
        elements = [(c, (x, k, y)) for x in c0.objects for k in c1.hom(c, x) for y in f.value(x)]
        relations = [
            ((c, (x2, k, f.act(h, y))), (c, (x, c1.compose(j(h), k), y)))
            for h in c0.sorted_arrows
            for x2, x in [c0.arrows[h]]
            for k in c1.hom(c, x2)
            for y in f.value(x)
        ]
        quotients[c] = quotient(elements, relations, budget)

    def cls(c, raw):
        return quotients[c].cls(c, raw)[1]

    members = {
        (c, rep[1]): tuple(m[1] for m in ms)
        for c, result in quotients.items()
        for rep, ms in result.classes.items()
    }
    return make_presheaf(
        c1,
        value=lambda c: sorted((rep[1] for rep in quotients[c].classes), key=canonical_key),
        act=lambda w, e: cls(c1.dom(w), (e[0], c1.compose(e[1], w), e[2])),
        members=members,
        name=f"Lan({f.name})",
        validate=False,
    )


def lan_bijection_check(
    j: IooFunctor, f: FinPresheaf, g: FinPresheaf, budget: Optional[int] = None
) -> CheckResult:
    """
    Nat(F, J*Lan G) and Nat(Lan F, Lan G) are in bijection by

        Phi(beta)_x(y) = beta_x([x, id, y])
        Psi(alpha)_c([x, k, y]) = (Lan G)(k)(alpha_x(y))

    verified elementwise in both directions.
    """
    c0, c1 = j.src, j.dst
    lan_f = lan_extend(f, j, budget)
    lan_g = lan_extend(g, j, budget)
    restricted = restrict_presheaf(lan_g, j)
    alphas = nat_transformations(f, restricted, budget)
    betas = nat_transformations(lan_f, lan_g, budget)
    logger.debug(f"Transformations: {len(alphas)} into the restriction, {len(betas)} between extensions")

    def phi(beta):
        return {(x, y): beta[(x, lan_f.cls(x, (x, c1.id(x), y)))] for x in c0.objects for y in f.value(x)}

    def psi(alpha):
        out = {}
        for c in c1.objects:
            for rep in lan_f.value(c):
                images = {
                    lan_g.act(k, alpha[(x, y)]) for x, k, y in lan_f.members.get((c, rep), (rep,))
                }
                if len(images) != 1:
                    return None
                out[(c, rep)] = images.pop()
        return out

    beta_keys = {freeze(b) for b in betas}
    alpha_keys = {freeze(a) for a in alphas}
    for alpha in alphas:
        beta = psi(alpha)
        if beta is None:
            return CheckResult.failed("well_defined", alpha=freeze(alpha))
        if freeze(beta) not in beta_keys:
            return CheckResult.failed("naturality", alpha=freeze(alpha))
        if freeze(phi(beta)) != freeze(alpha):
            return CheckResult.failed("left_inverse", alpha=freeze(alpha))
    for beta in betas:
        alpha = phi(beta)
        if freeze(alpha) not in alpha_keys:
            return CheckResult.failed("naturality", beta=freeze(beta))
        back = psi(alpha)
        if back is None or freeze(back) != freeze(beta):
            return CheckResult.failed("right_inverse", beta=freeze(beta))
    return CheckResult.passed("lan_bijection")
