"""
Set-valued bimodules between finite categories.

A profunctor P from `src` to `dst` has values P(d, c) with d an object of
`dst` (contravariant, acted on by `lact`) and c an object of `src`
(covariant, acted on by `ract`).
"""

import logging
from functools import cached_property
from typing import Any, Callable, Dict, Iterable, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from .category import Arrow, FinCat, IooFunctor, Obj
from .exceptions import LawViolationError
from .schemas import CheckResult

logger = logging.getLogger(__name__)

Element = Any


class FinProfunctor(BaseModel):
    """
    Finite profunctor by tables.

    lact_table[(u, c, x)] for u: d' -> d in dst and x in P(d, c) lies in P(d', c);
    ract_table[(v, d, x)] for v: c -> c' in src and x in P(d, c) lies in P(d, c').
    `members` maps each element of a quotient to its class, when known.
    """

    model_config = ConfigDict(frozen=True)

    src: FinCat
    dst: FinCat
    values: Dict[Tuple[Obj, Obj], Tuple[Element, ...]] = {}
    lact_table: Dict[Tuple[Arrow, Obj, Element], Element] = {}
    ract_table: Dict[Tuple[Arrow, Obj, Element], Element] = {}
    members: Dict[Tuple[Obj, Obj, Element], Tuple[Any, ...]] = {}
    name: str = ""

    def value(self, d: Obj, c: Obj) -> Tuple[Element, ...]:
        return self.values.get((d, c), ())

    def lact(self, u: Arrow, c: Obj, x: Element) -> Element:
        return self.lact_table[(u, c, x)]

    def ract(self, v: Arrow, d: Obj, x: Element) -> Element:
        return self.ract_table[(v, d, x)]

    def elements(self) -> Iterable[Tuple[Obj, Obj, Element]]:
        for d in self.dst.objects:
            for c in self.src.objects:
                for x in self.value(d, c):
                    yield d, c, x

    def size(self) -> int:
        return sum(len(v) for v in self.values.values())

    def sizes(self) -> Dict[Tuple[Obj, Obj], int]:
        return {k: len(v) for k, v in self.values.items()}

    @cached_property
    def class_index(self) -> Dict[Tuple[Obj, Obj, Any], Element]:
        index = {}
        for (d, c, rep), ms in self.members.items():
            for m in ms:
                index[(d, c, m)] = rep
        return index

    def cls(self, d: Obj, c: Obj, raw: Any) -> Element:
        """The element of P(d, c) whose class contains `raw`."""
        return self.class_index.get((d, c, raw), raw)

    @property
    def is_endo(self) -> bool:
        return self.src == self.dst


def check_profunctor(p: FinProfunctor) -> CheckResult:
    """Typing, identity, functoriality and commutation of both actions."""
    src, dst = p.src, p.dst
    for d, c, x in p.elements():
        if p.lact(dst.id(d), c, x) != x:
            return CheckResult.failed("identity", side="left", d=d, c=c, x=x)
        if p.ract(src.id(c), d, x) != x:
            return CheckResult.failed("identity", side="right", d=d, c=c, x=x)
        for u in dst.sorted_arrows:
            if dst.cod(u) != d:
                continue
            y = p.lact(u, c, x)
            if y not in p.value(dst.dom(u), c):
                return CheckResult.failed("typing", side="left", u=u, x=x, result=y)
            for u2 in dst.sorted_arrows:
                if dst.cod(u2) == dst.dom(u):
                    if p.lact(dst.compose(u, u2), c, x) != p.lact(u2, c, y):
                        return CheckResult.failed("functoriality", side="left", u=u, u2=u2, x=x)
        for v in src.arrows_from(c):
            y = p.ract(v, d, x)
            if y not in p.value(d, src.cod(v)):
                return CheckResult.failed("typing", side="right", v=v, x=x, result=y)
            for v2 in src.arrows_from(src.cod(v)):
                if p.ract(src.compose(v2, v), d, x) != p.ract(v2, d, y):
                    return CheckResult.failed("functoriality", side="right", v=v, v2=v2, x=x)
            for u in dst.sorted_arrows:
                if dst.cod(u) == d:
                    if p.lact(u, src.cod(v), y) != p.ract(v, dst.dom(u), p.lact(u, c, x)):
                        return CheckResult.failed("bimodule", u=u, v=v, x=x)
    return CheckResult.passed("profunctor")


def make_profunctor(
    src: FinCat,
    dst: FinCat,
    value: Callable[[Obj, Obj], Iterable[Element]],
    lact: Callable[[Arrow, Obj, Element], Element],
    ract: Callable[[Arrow, Obj, Element], Element],
    members: Optional[Mapping[Tuple[Obj, Obj, Element], Tuple[Any, ...]]] = None,
    name: str = "",
    validate: bool = True,
) -> FinProfunctor:
    """
    Tabulate a profunctor from functions.

    Raises:
        LawViolationError: the tables fail a bimodule law (when validating)
    """
    values = {(d, c): tuple(value(d, c)) for d in dst.objects for c in src.objects}
    lact_table = {}
    for u in dst.sorted_arrows:
        d = dst.cod(u)
        for c in src.objects:
            for x in values[(d, c)]:
                lact_table[(u, c, x)] = lact(u, c, x)
    ract_table = {}
    for v in src.sorted_arrows:
        c = src.dom(v)
        for d in dst.objects:
            for x in values[(d, c)]:
                ract_table[(v, d, x)] = ract(v, d, x)
    p = FinProfunctor(
        src=src,
        dst=dst,
        values=values,
        lact_table=lact_table,
        ract_table=ract_table,
        members=dict(members or {}),
        name=name,
    )
    if validate:
        result = check_profunctor(p)
        if not result.ok:
            raise LawViolationError(
                f"Profunctor {name} violates {result.law}: {result.witness}",
                law=result.law,
                witness=result.witness,
            )
    return p


def hom_profunctor(c: FinCat) -> FinProfunctor:
    """C(d, c) with pre- and post-composition."""
    return make_profunctor(
        c,
        c,
        value=c.hom,
        lact=lambda u, _, x: c.compose(x, u),
        ract=lambda v, _, x: c.compose(v, x),
        name=f"hom({c.name})",
        validate=False,
    )


def constant_profunctor(src: FinCat, dst: FinCat, elements: Iterable[Element]) -> FinProfunctor:
    elements = tuple(elements)
    return make_profunctor(
        src,
        dst,
        value=lambda d, c: elements,
        lact=lambda u, c, x: x,
        ract=lambda v, d, x: x,
        name=f"const{len(elements)}",
        validate=False,
    )


def restrict_profunctor(p: FinProfunctor, j_src: IooFunctor, j_dst: IooFunctor) -> FinProfunctor:
    """P(J d, J c) as a profunctor from j_src.src to j_dst.src."""
    return make_profunctor(
        j_src.src,
        j_dst.src,
        value=p.value,
        lact=lambda u, c, x: p.lact(j_dst(u), c, x),
        ract=lambda v, d, x: p.ract(j_src(v), d, x),
        name=f"restrict({p.name})",
        validate=False,
    )


Transformation = Dict[Tuple[Obj, Obj, Element], Element]


def check_natural(p: FinProfunctor, q: FinProfunctor, phi: Mapping) -> CheckResult:
    """phi: P => Q is typed and commutes with both actions."""
    for d, c, x in p.elements():
        y = phi.get((d, c, x))
        if y not in q.value(d, c):
            return CheckResult.failed("typing", d=d, c=c, x=x, image=y)
        for u in p.dst.sorted_arrows:
            if p.dst.cod(u) == d:
                if phi[(p.dst.dom(u), c, p.lact(u, c, x))] != q.lact(u, c, y):
                    return CheckResult.failed("naturality", side="left", u=u, d=d, c=c, x=x)
        for v in p.src.arrows_from(c):
            if phi[(d, p.src.cod(v), p.ract(v, d, x))] != q.ract(v, d, y):
                return CheckResult.failed("naturality", side="right", v=v, d=d, c=c, x=x)
    return CheckResult.passed("naturality")


def check_bijective(p: FinProfunctor, q: FinProfunctor, phi: Mapping) -> CheckResult:
    for d in p.dst.objects:
        for c in p.src.objects:
            images = [phi.get((d, c, x)) for x in p.value(d, c)]
            if len(set(images)) != len(images):
                return CheckResult.failed("injectivity", d=d, c=c)
            if set(images) != set(q.value(d, c)):
                return CheckResult.failed("surjectivity", d=d, c=c)
    return CheckResult.passed("bijectivity")


def induced_transformation(
    p: FinProfunctor, fn: Callable[[Obj, Obj, Any], Element]
) -> Tuple[Transformation, CheckResult]:
    """
    Tabulate fn on representatives, checking it is constant on each class
    when P is a quotient.
    """
    phi: Transformation = {}
    for d, c, x in p.elements():
        image = fn(d, c, x)
        for member in p.members.get((d, c, x), ()):
            other = fn(d, c, member)
            if other != image:
                return phi, CheckResult.failed(
                    "well_defined", d=d, c=c, representative=x, member=member
                )
        phi[(d, c, x)] = image
    return phi, CheckResult.passed("well_defined")


def natural_iso_check(
    p: FinProfunctor, q: FinProfunctor, fn: Callable[[Obj, Obj, Any], Element]
) -> CheckResult:
    """fn induces a well-defined natural bijection P => Q."""
    phi, result = induced_transformation(p, fn)
    if not result.ok:
        return result
    for check in (check_natural(p, q, phi), check_bijective(p, q, phi)):
        if not check.ok:
            return check
    return CheckResult.passed("natural_isomorphism")
