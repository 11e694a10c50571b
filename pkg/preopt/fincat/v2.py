"""
Pairs of profunctors over C0 and C1 linked by a comparison eta, their
composites, tightness and the map they induce between coends.
"""

import logging
from typing import Any, Callable, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from .category import IooFunctor, Obj, identity_functor
from .coend import coend, compose_profunctors, induced_map
from .effectful import EffectfulCategory
from .exceptions import LawViolationError
from .profunctor import FinProfunctor, Transformation, hom_profunctor, restrict_profunctor
from .schemas import CheckResult, V2CoendResult

logger = logging.getLogger(__name__)


class V2Profunctor(BaseModel):
    """
    P0 from j_src.src to j_dst.src, P1 from j_src.dst to j_dst.dst, and
    eta[(d, c, x)] in P1(J d, J c) for x in P0(d, c).
    """

    model_config = ConfigDict(frozen=True)

    j_src: IooFunctor
    j_dst: IooFunctor
    p0: FinProfunctor
    p1: FinProfunctor
    eta: Dict[Tuple[Obj, Obj, Any], Any] = {}


def check_v2(v: V2Profunctor) -> CheckResult:
    """eta is typed and natural in both variables along J."""
    p0, p1 = v.p0, v.p1
    for d, c, x in p0.elements():
        y = v.eta.get((d, c, x))
        if y not in p1.value(d, c):
            return CheckResult.failed("typing", d=d, c=c, x=x, image=y)
        for u in p0.dst.sorted_arrows:
            if p0.dst.cod(u) == d:
                lhs = v.eta[(p0.dst.dom(u), c, p0.lact(u, c, x))]
                if lhs != p1.lact(v.j_dst(u), c, y):
                    return CheckResult.failed("naturality", side="left", u=u, x=x)
        for w in p0.src.arrows_from(c):
            lhs = v.eta[(d, p0.src.cod(w), p0.ract(w, d, x))]
            if lhs != p1.ract(v.j_src(w), d, y):
                return CheckResult.failed("naturality", side="right", v=w, x=x)
    return CheckResult.passed("v2_naturality")


def make_v2(
    j_src: IooFunctor,
    j_dst: IooFunctor,
    p0: FinProfunctor,
    p1: FinProfunctor,
    eta: Callable[[Obj, Obj, Any], Any],
) -> V2Profunctor:
    """
    Raises:
        LawViolationError: eta is not natural
    """
    v = V2Profunctor(
        j_src=j_src,
        j_dst=j_dst,
        p0=p0,
        p1=p1,
        eta={(d, c, x): eta(d, c, x) for d, c, x in p0.elements()},
    )
    result = check_v2(v)
    if not result.ok:
        raise LawViolationError(
            f"Comparison is not natural ({result.law}): {result.witness}",
            law=result.law,
            witness=result.witness,
        )
    return v


def hom_v2(eff: EffectfulCategory) -> V2Profunctor:
    """(C0(-, =), C1(-, =), J)."""
    return make_v2(eff.j, eff.j, hom_profunctor(eff.c0), hom_profunctor(eff.c1), lambda d, c, u: eff.j(u))


def is_tight(v: V2Profunctor) -> bool:
    """Every component of eta is a bijection."""
    for d in v.p0.dst.objects:
        for c in v.p0.src.objects:
            images = [v.eta[(d, c, x)] for x in v.p0.value(d, c)]
            if len(set(images)) != len(images) or set(images) != set(v.p1.value(d, c)):
                return False
    return True


def v2_compose(q: V2Profunctor, p: V2Profunctor, budget: Optional[int] = None) -> V2Profunctor:
    """
    Compose both layers pointwise; eta sends [b, y, x] to [b, eta_Q y, eta_P x].

    Raises:
        LawViolationError: the composite eta is not constant on a class
    """
    p0 = compose_profunctors(q.p0, p.p0, budget)
    p1 = compose_profunctors(q.p1, p.p1, budget)

    def raw(e, a, triple):
        b, y, x = triple
        return p1.cls(e, a, (b, q.eta[(e, b, y)], p.eta[(b, a, x)]))

    eta: Transformation = {}
    for e, a, rep in p0.elements():
        image = raw(e, a, rep)
        for member in p0.members.get((e, a, rep), ()):
            if raw(e, a, member) != image:
                raise LawViolationError(
                    "Composite comparison is not well defined",
                    law="well_defined",
                    witness={"class": rep, "member": member},
                )
        eta[(e, a, rep)] = image
    return make_v2(p.j_src, q.j_dst, p0, p1, lambda d, c, x: eta[(d, c, x)])


def v2_coend(v: V2Profunctor, budget: Optional[int] = None) -> V2CoendResult:
    """
    Coends of both layers and the map between them induced by eta.

    Raises:
        LawViolationError: the induced map is not well defined
    """
    c0 = coend(v.p0, budget)
    c1 = coend(v.p1, budget)
    mapping, result = induced_map(c0, lambda m: c1.cls(m[0], v.eta[(m[0], m[0], m[1])]))
    if not result.ok:
        raise LawViolationError(
            f"Comparison does not descend to the coend: {result.witness}",
            law="square",
            witness=result.witness,
        )
    logger.debug(f"Induced map between coends of sizes {len(c0)} and {len(c1)}")
    return V2CoendResult(coend0=c0, coend1=c1, induced=mapping)


def identity_v2(p: FinProfunctor) -> V2Profunctor:
    """P over the identity functor with eta = id."""
    return make_v2(
        identity_functor(p.src), identity_functor(p.dst), p, p, lambda d, c, x: x
    )


def restriction_v2(p1: FinProfunctor, j_src: IooFunctor, j_dst: IooFunctor) -> V2Profunctor:
    """P1 restricted along J on both sides, with eta = id; tight by construction."""
    return make_v2(j_src, j_dst, restrict_profunctor(p1, j_src, j_dst), p1, lambda d, c, x: x)
