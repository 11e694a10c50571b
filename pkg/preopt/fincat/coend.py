"""
Coends as union-find quotients, ends as filtered products, and the
pointwise composite of profunctors.
"""

import logging
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Tuple

from ..config import get_settings
from ..infra.enumeration import enumerate_families
from ..infra.union_find import UnionFind, canonical_key
from .category import Obj
from .exceptions import LawViolationError, SizeExceededError
from .profunctor import FinProfunctor, make_profunctor
from .schemas import CheckResult, CoendResult

logger = logging.getLogger(__name__)

Member = Tuple[Hashable, Hashable]


def quotient(
    elements: Iterable[Member],
    relations: Iterable[Tuple[Member, Member]],
    budget: Optional[int] = None,
) -> CoendResult:
    """
    Quotient indexed elements (index, value) by the equivalence generated
    by `relations`.

    Raises:
        SizeExceededError: more elements than the budget allows
    """
    limit = get_settings().resolve_budget(budget)
    uf = UnionFind()
    for member in elements:
        uf.add(member)
        if len(uf) > limit:
            raise SizeExceededError(f"Coend has more than {limit} raw elements", limit=limit)
    for x, y in relations:
        uf.union(x, y)
    classes = {
        rep: tuple(sorted(members, key=canonical_key)) for rep, members in uf.classes().items()
    }
    coproj: Dict[Any, Dict[Any, Any]] = {}
    for rep, members in classes.items():
        for index, value in members:
            coproj.setdefault(index, {})[value] = rep
    logger.debug(f"Quotient of {len(uf)} elements has {len(classes)} classes")
    return CoendResult(classes=classes, coproj=coproj)


def coend(p: FinProfunctor, budget: Optional[int] = None) -> CoendResult:
    """
    The coend of an endo-profunctor: pairs (c, x) with x in P(c, c), where
    (c, f . x) ~ (c', x . f) for f: c -> c' and x in P(c', c).
    """
    if p.src != p.dst:
        raise LawViolationError("Coend needs an endo-profunctor", law="endo")
    c = p.src
    elements = [(a, x) for a in c.objects for x in p.value(a, a)]

    def relations():
        for f in c.sorted_arrows:
            a, a2 = c.arrows[f]
            for x in p.value(a2, a):
                yield (a, p.lact(f, a, x)), (a2, p.ract(f, a2, x))

    return quotient(elements, relations(), budget)


def check_extranatural(p: FinProfunctor, result: CoendResult) -> CheckResult:
    c = p.src
    for f in c.sorted_arrows:
        a, a2 = c.arrows[f]
        for x in p.value(a2, a):
            if result.cls(a, p.lact(f, a, x)) != result.cls(a2, p.ract(f, a2, x)):
                return CheckResult.failed("extranaturality", arrow=f, element=x)
    return CheckResult.passed("extranaturality")


def factor_through_coend(
    p: FinProfunctor, result: CoendResult, family: Mapping[Obj, Mapping[Any, Any]]
) -> Dict[Any, Any]:
    """
    The unique map out of the coend that a cowedge `family` (c -> x -> z)
    factors through.

    Raises:
        LawViolationError: the family is not extranatural
    """
    factor: Dict[Any, Any] = {}
    for rep, members in result.classes.items():
        images = {family[a][x] for a, x in members}
        if len(images) != 1:
            raise LawViolationError(
                f"Family is not extranatural on class {rep!r}",
                law="extranaturality",
                witness={"class": rep, "images": sorted(images, key=canonical_key)},
            )
        factor[rep] = images.pop()
    return factor


def end_(p: FinProfunctor, budget: Optional[int] = None) -> List[Dict[Obj, Any]]:
    """
    Families (x_c) with x_c in P(c, c) and f . x_c' = x_c . f for every
    f: c -> c'.

    Raises:
        SizeExceededError: the search visits more nodes than the budget
    """
    if p.src != p.dst:
        raise LawViolationError("End needs an endo-profunctor", law="endo")
    c = p.src
    limit = get_settings().resolve_budget(budget)
    components = {a: p.value(a, a) for a in c.objects}
    constraints = []
    for f in c.sorted_arrows:
        a, a2 = c.arrows[f]
        constraints.append(
            (
                (a, a2),
                lambda s, f=f, a=a, a2=a2: p.lact(f, a2, s[a2]) == p.ract(f, a, s[a]),
            )
        )
    return list(enumerate_families(components, constraints, limit, SizeExceededError))


def induced_map(
    source: CoendResult, fn: Callable[[Member], Any], law: str = "well_defined"
) -> Tuple[Dict[Any, Any], CheckResult]:
    """Tabulate fn on each class, checking it is constant on members."""
    mapping: Dict[Any, Any] = {}
    for rep, members in source.classes.items():
        image = fn(rep)
        for member in members:
            other = fn(member)
            if other != image:
                return mapping, CheckResult.failed(law, representative=rep, member=member)
        mapping[rep] = image
    return mapping, CheckResult.passed(law)


def check_bijection(mapping: Mapping[Any, Any], target: Iterable[Any]) -> CheckResult:
    target = set(target)
    images = list(mapping.values())
    if len(set(images)) != len(images):
        return CheckResult.failed("injectivity", size=len(images))
    if set(images) != target:
        missing = sorted(target - set(images), key=canonical_key)[:1]
        return CheckResult.failed("surjectivity", missing=missing)
    return CheckResult.passed("bijectivity")


def induced_bijection_check(
    source: CoendResult, fn: Callable[[Member], Any], target: Iterable[Any], law: str
) -> CheckResult:
    """fn is constant on classes and induces a bijection onto target."""
    mapping, result = induced_map(source, fn)
    if not result.ok:
        return result
    result = check_bijection(mapping, target)
    if not result.ok:
        return result
    return CheckResult.passed(law)


def compose_profunctors(
    q: FinProfunctor, p: FinProfunctor, budget: Optional[int] = None
) -> FinProfunctor:
    """
    (Q . P)(e, a) = coend over b of Q(e, b) x P(b, a).

    Elements are class representatives (b, q, p); `members` keeps each class.
    """
    if p.dst != q.src:
        raise LawViolationError("Composite needs dst(P) = src(Q)", law="typing")
    budget = get_settings().resolve_budget(budget)
    mid = p.dst
    quotients: Dict[Tuple[Obj, Obj], CoendResult] = {}
    for e in q.dst.objects:
        for a in p.src.objects:
            elements = [
                ((e, a), (b, x, y))
                for b in mid.objects
                for x in q.value(e, b)
                for y in p.value(b, a)
            ]

            def relations(e=e, a=a):
                for u in mid.sorted_arrows:
                    b2, b = mid.arrows[u]
                    for x in q.value(e, b2):
                        for y in p.value(b, a):
                            yield ((e, a), (b2, x, p.lact(u, a, y))), ((e, a), (b, q.ract(u, e, x), y))

            quotients[(e, a)] = quotient(elements, relations(), budget)

    def cls(e, a, raw):
        return quotients[(e, a)].cls((e, a), raw)[1]

    members = {
        (e, a, rep[1]): tuple(m[1] for m in ms)
        for (e, a), result in quotients.items()
        for rep, ms in result.classes.items()
    }
    return make_profunctor(
        p.src,
        q.dst,
        value=lambda e, a: sorted((rep[1] for rep in quotients[(e, a)].classes), key=canonical_key),
        lact=lambda w, a, x: cls(q.dst.dom(w), a, (x[0], q.lact(w, x[0], x[1]), x[2])),
        ract=lambda v, e, x: cls(e, p.src.cod(v), (x[0], x[1], p.ract(v, x[0], x[2]))),
        members=members,
        name=f"({q.name}.{p.name})",
        validate=False,
    )
