"""
Effectful categories J : C0 -> C1 on finite data, and the writer family.
"""

import itertools
import logging
from typing import Iterable

from pydantic import BaseModel, ConfigDict

from .category import FinCat, IooFunctor, category_from_functions, check_functor, identity_functor, make_functor
from .exceptions import FinCatError, LawViolationError
from .monoidal import (
    FinMonoid,
    MonStructure,
    check_mon_structure,
    interchange_witness,
    is_central_arrow,
    make_mon_structure,
)
from .schemas import CheckResult

logger = logging.getLogger(__name__)


class EffectfulCategory(BaseModel):
    """An identity-on-objects strict premonoidal functor from a monoidal category."""

    model_config = ConfigDict(frozen=True)

    c0: FinCat
    c1: FinCat
    j: IooFunctor
    mon0: MonStructure
    mon1: MonStructure
    name: str = ""


def check_effectful(eff: EffectfulCategory) -> CheckResult:
    """Functor, both premonoidal structures, monoidal base, strictness and centrality of J."""
    for result in (check_functor(eff.j), check_mon_structure(eff.mon0), check_mon_structure(eff.mon1)):
        if not result.ok:
            return result
    witness = interchange_witness(eff.mon0)
    if witness is not None:
        return CheckResult.failed("monoidal_base", **witness)
    if eff.mon0.tensor != eff.mon1.tensor or eff.mon0.unit != eff.mon1.unit:
        return CheckResult.failed("object_tensor")
    j = eff.j
    for a in eff.c0.objects:
        for f in eff.c0.sorted_arrows:
            if j(eff.mon0.lwhisker(a, f)) != eff.mon1.lwhisker(a, j(f)):
                return CheckResult.failed("strict_premonoidal", side="left", object=a, arrow=f)
            if j(eff.mon0.rwhisker(f, a)) != eff.mon1.rwhisker(j(f), a):
                return CheckResult.failed("strict_premonoidal", side="right", object=a, arrow=f)
    for f in eff.c0.sorted_arrows:
        if not is_central_arrow(eff.mon1, j(f)):
            return CheckResult.failed("centrality", arrow=f)
    return CheckResult.passed("effectful")


def _validated(eff: EffectfulCategory) -> EffectfulCategory:
    result = check_effectful(eff)
    if not result.ok:
        raise LawViolationError(
            f"Not an effectful category ({result.law}): {result.witness}",
            law=result.law,
            witness=result.witness,
        )
    return eff


def identity_effectful(mon: MonStructure, name: str = "") -> EffectfulCategory:
    """J = identity on a monoidal category."""
    c = mon.category
    return _validated(
        EffectfulCategory(
            c0=c, c1=c, j=identity_functor(c), mon0=mon, mon1=mon, name=name or c.name
        )
    )


def _function_arrows(n: int, m: int, labels=None):
    if labels is None:
        return [(n, m, imgs) for imgs in itertools.product(range(m), repeat=n)]
    outputs = [(x, y) for x in labels for y in range(m)]
    return [(n, m, imgs) for imgs in itertools.product(outputs, repeat=n)]


def make_writer_effectful(monoid: FinMonoid, universe: Iterable[int] = (0, 1)) -> EffectfulCategory:
    """
    The writer effectful category over finite sets of the given sizes.

    C0 has functions n -> m, C1 has functions n -> M x m with outputs
    multiplied left to right along composition, and J tags every output
    with the unit. The tensor is the product, an element (i, x) of a*n
    encoded as i*n + x.

    Raises:
        FinCatError: the universe lacks 1 or is not closed under products
        LawViolationError: a constructed table fails a law
    """
    sizes = sorted(set(universe))
    if 1 not in sizes:
        raise FinCatError(f"Universe {sizes} must contain the unit size 1")
    for n in sizes:
        for m in sizes:
            if n * m not in sizes:
                raise FinCatError(f"Universe {sizes} is not closed under products ({n}*{m})")
    e = monoid.unit

    c0 = category_from_functions(
        sizes,
        {(n, m): _function_arrows(n, m) for n in sizes for m in sizes},
        compose=lambda g, f: (f[0], g[1], tuple(g[2][y] for y in f[2])),
        identity=lambda n: (n, n, tuple(range(n))),
        name=f"writer:{monoid.name}:C0",
    )

    def compose1(g, f):
        out = []
        for mf, y in f[2]:
            mg, z = g[2][y]
            out.append((monoid.mul(mf, mg), z))
        return (f[0], g[1], tuple(out))

    c1 = category_from_functions(
        sizes,
        {(n, m): _function_arrows(n, m, monoid.elements) for n in sizes for m in sizes},
        compose=compose1,
        identity=lambda n: (n, n, tuple((e, x) for x in range(n))),
        name=f"writer:{monoid.name}:C1",
    )

    j = make_functor(c0, c1, {f: (f[0], f[1], tuple((e, y) for y in f[2])) for f in c0.arrows})

    def left0(a, f):
        n, m, imgs = f
        return (a * n, a * m, tuple(i * m + imgs[x] for i in range(a) for x in range(n)))

    def right0(f, a):
        n, m, imgs = f
        return (n * a, m * a, tuple(imgs[x] * a + i for x in range(n) for i in range(a)))

    def left1(a, f):
        n, m, imgs = f
        return (
            a * n,
            a * m,
            tuple((imgs[x][0], i * m + imgs[x][1]) for i in range(a) for x in range(n)),
        )

    def right1(f, a):
        n, m, imgs = f
        return (
            n * a,
            m * a,
            tuple((imgs[x][0], imgs[x][1] * a + i) for x in range(n) for i in range(a)),
        )

    mon0 = make_mon_structure(c0, lambda a, b: a * b, 1, left0, right0)
    mon1 = make_mon_structure(c1, lambda a, b: a * b, 1, left1, right1)
    eff = EffectfulCategory(
        c0=c0, c1=c1, j=j, mon0=mon0, mon1=mon1, name=f"writer:{monoid.name}"
    )
    logger.debug(
        f"Built writer category over {monoid.name} on sizes {sizes}: "
        f"{len(c0.arrows)} pure and {len(c1.arrows)} effectful arrows"
    )
    return _validated(eff)


def writer_constant(label, n: int = 1):
    """The writer arrow n -> 1 that emits `label` on every input."""
    return (n, 1, ((label, 0),) * n)
