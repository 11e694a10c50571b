"""
Finite presheaves and enumeration of natural transformations between them.
"""

import logging
from functools import cached_property
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ..config import get_settings
from ..infra.enumeration import enumerate_families
from ..infra.union_find import canonical_key
from .category import Arrow, FinCat, IooFunctor, Obj
from .exceptions import LawViolationError, SizeExceededError
from .schemas import CheckResult

logger = logging.getLogger(__name__)

Element = Any
NatTrans = Dict[Tuple[Obj, Element], Element]


class FinPresheaf(BaseModel):
    """
    A contravariant functor into finite sets.

    act_table[(u, x)] for u: c' -> c and x in F(c) lies in F(c').
    """

    model_config = ConfigDict(frozen=True)

    category: FinCat
    values: Dict[Obj, Tuple[Element, ...]] = {}
    act_table: Dict[Tuple[Arrow, Element], Element] = {}
    members: Dict[Tuple[Obj, Element], Tuple[Any, ...]] = {}
    name: str = ""

    def value(self, c: Obj) -> Tuple[Element, ...]:
        return self.values.get(c, ())

    def act(self, u: Arrow, x: Element) -> Element:
        return self.act_table[(u, x)]

    def elements(self) -> Iterable[Tuple[Obj, Element]]:
        for c in self.category.objects:
            for x in self.value(c):
                yield c, x

    def sizes(self) -> Dict[Obj, int]:
        return {c: len(self.value(c)) for c in self.category.objects}

    @cached_property
    def class_index(self) -> Dict[Tuple[Obj, Any], Element]:
        index = {}
        for (c, rep), ms in self.members.items():
            for m in ms:
                index[(c, m)] = rep
        return index

    def cls(self, c: Obj, raw: Any) -> Element:
        """The element of F(c) whose class contains `raw`."""
        return self.class_index.get((c, raw), raw)


def check_presheaf(f: FinPresheaf) -> CheckResult:
    cat = f.category
    for c, x in f.elements():
        if f.act(cat.id(c), x) != x:
            return CheckResult.failed("identity", object=c, x=x)
    for g, h in cat.composable_pairs():
        # h: a -> b, g: b -> c
        for x in f.value(cat.cod(g)):
            y = f.act(g, x)
            if y not in f.value(cat.dom(g)):
                return CheckResult.failed("typing", arrow=g, x=x, result=y)
            if f.act(cat.compose(g, h), x) != f.act(h, y):
                return CheckResult.failed("functoriality", g=g, h=h, x=x)
    return CheckResult.passed("presheaf")


def make_presheaf(
    category: FinCat,
    value: Callable[[Obj], Iterable[Element]],
    act: Callable[[Arrow, Element], Element],
    members: Optional[Mapping] = None,
    name: str = "",
    validate: bool = True,
) -> FinPresheaf:
    """
    Raises:
        LawViolationError: the action is not functorial (when validating)
    """
    values = {c: tuple(value(c)) for c in category.objects}
    table = {}
    for u in category.sorted_arrows:
        for x in values[category.cod(u)]:
            table[(u, x)] = act(u, x)
    f = FinPresheaf(
        category=category, values=values, act_table=table, members=dict(members or {}), name=name
    )
    if validate:
        result = check_presheaf(f)
        if not result.ok:
            raise LawViolationError(
                f"Presheaf {name} violates {result.law}: {result.witness}",
                law=result.law,
                witness=result.witness,
            )
    return f


def representable(category: FinCat, a: Obj) -> FinPresheaf:
    """C(-, a)."""
    return make_presheaf(
        category,
        value=lambda c: category.hom(c, a),
        act=lambda u, x: category.compose(x, u),
        name=f"y({a})",
        validate=False,
    )


def constant_presheaf(category: FinCat, elements: Iterable[Element]) -> FinPresheaf:
    elements = tuple(elements)
    return make_presheaf(
        category, value=lambda c: elements, act=lambda u, x: x, name=f"const{len(elements)}", validate=False
    )


def restrict_presheaf(f: FinPresheaf, j: IooFunctor) -> FinPresheaf:
    """F . J as a presheaf on j.src."""
    return make_presheaf(
        j.src,
        value=f.value,
        act=lambda u, x: f.act(j(u), x),
        members=f.members,
        name=f"restrict({f.name})",
        validate=False,
    )


def nat_constraints(f: FinPresheaf, g: FinPresheaf):
    cat = f.category
    for u in cat.sorted_arrows:
        c2, c = cat.arrows[u]
        for x in f.value(c):
            x2 = f.act(u, x)
            yield (
                ((c, x), (c2, x2)),
                lambda s, u=u, c=c, x=x, c2=c2, x2=x2: s[(c2, x2)] == g.act(u, s[(c, x)]),
            )


def nat_transformations(
    f: FinPresheaf, g: FinPresheaf, budget: Optional[int] = None
) -> List[NatTrans]:
    """
    Every natural transformation F => G, as maps (c, x) -> element of G(c).

    Raises:
        SizeExceededError: the search visits more nodes than the budget
    """
    if f.category != g.category:
        raise LawViolationError("Presheaves live on different categories", law="typing")
    limit = get_settings().resolve_budget(budget)
    components = {(c, x): g.value(c) for c, x in f.elements()}
    found = list(enumerate_families(components, list(nat_constraints(f, g)), limit, SizeExceededError))
    logger.debug(f"Found {len(found)} transformations {f.name} => {g.name}")
    return found


def check_nat(f: FinPresheaf, g: FinPresheaf, alpha: Mapping) -> CheckResult:
    for (c, x) in f.elements():
        if alpha.get((c, x)) not in g.value(c):
            return CheckResult.failed("typing", object=c, x=x)
    for (deps, pred) in nat_constraints(f, g):
        if not pred(alpha):
            return CheckResult.failed("naturality", instance=deps)
    return CheckResult.passed("naturality")


def freeze(alpha: Mapping) -> Tuple[Tuple[Any, Any], ...]:
    """A hashable, order-independent form of a transformation or family."""
    return tuple(sorted(alpha.items(), key=canonical_key))
