"""
Finite categories given by explicit composition tables, and
identity-on-objects functors between them.
"""

import logging
from functools import cached_property
from typing import Any, Dict, Iterable, List, Mapping, Tuple

from pydantic import BaseModel, ConfigDict

from ..infra.union_find import canonical_key
from .exceptions import FinCatError, LawViolationError
from .schemas import CheckResult

logger = logging.getLogger(__name__)

Arrow = Any
Obj = Any


class FinCat(BaseModel):
    """
    A finite category.

    `arrows` maps each arrow id to its (dom, cod); `comp[(g, f)]` is g after f
    for every composable pair; `ids` gives the identity of each object.
    """

    model_config = ConfigDict(frozen=True)

    objects: Tuple[Obj, ...] = ()
    arrows: Dict[Arrow, Tuple[Obj, Obj]] = {}
    comp: Dict[Tuple[Arrow, Arrow], Arrow] = {}
    ids: Dict[Obj, Arrow] = {}
    name: str = ""

    @cached_property
    def hom_index(self) -> Dict[Tuple[Obj, Obj], Tuple[Arrow, ...]]:
        homs: Dict[Tuple[Obj, Obj], List[Arrow]] = {(a, b): [] for a in self.objects for b in self.objects}
        for f, (a, b) in self.arrows.items():
            homs[(a, b)].append(f)
        return {k: tuple(sorted(v, key=canonical_key)) for k, v in homs.items()}

    def hom(self, a: Obj, b: Obj) -> Tuple[Arrow, ...]:
        return self.hom_index.get((a, b), ())

    def dom(self, f: Arrow) -> Obj:
        return self.arrows[f][0]

    def cod(self, f: Arrow) -> Obj:
        return self.arrows[f][1]

    def id(self, a: Obj) -> Arrow:
        return self.ids[a]

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        """g after f."""
        try:
            return self.comp[(g, f)]
        except KeyError as e:
            raise FinCatError(f"Arrows {g!r} and {f!r} are not composable in {self.name or 'category'}") from e

    def then(self, *fs: Arrow) -> Arrow:
        """Diagrammatic composite: first fs[0], then fs[1], ..."""
        result = fs[0]
        for f in fs[1:]:
            result = self.compose(f, result)
        return result

    @cached_property
    def sorted_arrows(self) -> Tuple[Arrow, ...]:
        return tuple(sorted(self.arrows, key=canonical_key))

    @cached_property
    def out_index(self) -> Dict[Obj, Tuple[Arrow, ...]]:
        index: Dict[Obj, List[Arrow]] = {a: [] for a in self.objects}
        for f in self.sorted_arrows:
            index[self.arrows[f][0]].append(f)
        return {a: tuple(fs) for a, fs in index.items()}

    def arrows_from(self, a: Obj) -> Tuple[Arrow, ...]:
        return self.out_index.get(a, ())

    def composable_pairs(self) -> Iterable[Tuple[Arrow, Arrow]]:
        """All (g, f) with cod f = dom g."""
        for f in self.sorted_arrows:
            for g in self.arrows_from(self.arrows[f][1]):
                yield g, f

    def __len__(self) -> int:
        return len(self.arrows)


def check_fincat(c: FinCat) -> CheckResult:
    """Exhaustively check typing, unit and associativity laws."""
    objects = set(c.objects)
    for f, (a, b) in c.arrows.items():
        if a not in objects or b not in objects:
            return CheckResult.failed("typing", arrow=f, dom=a, cod=b)
    for a in c.objects:
        if a not in c.ids or c.arrows.get(c.ids[a]) != (a, a):
            return CheckResult.failed("identity", object=a)
    for g, f in c.composable_pairs():
        h = c.comp.get((g, f))
        if h is None:
            return CheckResult.failed("totality", g=g, f=f)
        if c.arrows.get(h) != (c.dom(f), c.cod(g)):
            return CheckResult.failed("typing", g=g, f=f, composite=h)
    for f in c.sorted_arrows:
        a, b = c.arrows[f]
        if c.comp[(f, c.ids[a])] != f or c.comp[(c.ids[b], f)] != f:
            return CheckResult.failed("unit", arrow=f)
    for g, f in c.composable_pairs():
        gf = c.comp[(g, f)]
        for h in c.arrows_from(c.cod(g)):
            if c.comp[(h, gf)] != c.comp[(c.comp[(h, g)], f)]:
                return CheckResult.failed("associativity", h=h, g=g, f=f)
    return CheckResult.passed("category")


def make_fincat(
    objects: Iterable[Obj],
    arrows: Mapping[Arrow, Tuple[Obj, Obj]],
    comp: Mapping[Tuple[Arrow, Arrow], Arrow],
    ids: Mapping[Obj, Arrow],
    name: str = "",
) -> FinCat:
    """
    Build and validate a finite category.

    Raises:
        LawViolationError: typing, totality, unit or associativity fails;
            the witness names the failing arrows
    """
    c = FinCat(
        objects=tuple(objects),
        arrows={f: tuple(ends) for f, ends in arrows.items()},
        comp=dict(comp),
        ids=dict(ids),
        name=name,
    )
    result = check_fincat(c)
    if not result.ok:
        raise LawViolationError(
            f"Category {name or '<anonymous>'} violates {result.law}: {result.witness}",
            law=result.law,
            witness=result.witness,
        )
    logger.debug(f"Validated category {name} with {len(c.objects)} objects, {len(c.arrows)} arrows")
    return c


def category_from_functions(
    objects: Iterable[Obj],
    homs: Mapping[Tuple[Obj, Obj], Iterable[Arrow]],
    compose: Any,
    identity: Any,
    name: str = "",
) -> FinCat:
    """Tabulate a category from hom lists and composition/identity functions."""
    objects = tuple(objects)
    arrows: Dict[Arrow, Tuple[Obj, Obj]] = {}
    for (a, b), fs in homs.items():
        for f in fs:
            arrows[f] = (a, b)
    comp = {}
    for f, (a, b) in arrows.items():
        for g, (b2, c) in arrows.items():
            if b == b2:
                comp[(g, f)] = compose(g, f)
    return make_fincat(objects, arrows, comp, {a: identity(a) for a in objects}, name=name)


def terminal_category() -> FinCat:
    return make_fincat(["*"], {"id*": ("*", "*")}, {("id*", "id*"): "id*"}, {"*": "id*"}, name="trivial")


def discrete_category(n: int) -> FinCat:
    objects = list(range(n))
    arrows = {("id", k): (k, k) for k in objects}
    comp = {(("id", k), ("id", k)): ("id", k) for k in objects}
    return make_fincat(objects, arrows, comp, {k: ("id", k) for k in objects}, name=f"discrete:{n}")


def poset_category(objects: Iterable[Obj], leq: Any, name: str = "") -> FinCat:
    """A thin category: one arrow (a, b) whenever leq(a, b)."""
    objects = list(objects)
    homs = {(a, b): [(a, b)] if leq(a, b) else [] for a in objects for b in objects}
    return category_from_functions(
        objects,
        homs,
        compose=lambda g, f: (f[0], g[1]),
        identity=lambda a: (a, a),
        name=name,
    )


def walking_arrow() -> FinCat:
    """0 -> 1 with one non-identity arrow."""
    return poset_category([0, 1], lambda a, b: a <= b, name="walking-arrow")


def product_category(c: FinCat, d: FinCat) -> FinCat:
    """Objects and arrows are pairs; composition is componentwise."""
    objects = [(a, b) for a in c.objects for b in d.objects]
    homs = {
        ((a, b), (a2, b2)): [(f, g) for f in c.hom(a, a2) for g in d.hom(b, b2)]
        for (a, b) in objects
        for (a2, b2) in objects
    }
    return category_from_functions(
        objects,
        homs,
        compose=lambda g, f: (c.compose(g[0], f[0]), d.compose(g[1], f[1])),
        identity=lambda ab: (c.id(ab[0]), d.id(ab[1])),
        name=f"{c.name}x{d.name}",
    )


class IooFunctor(BaseModel):
    """An identity-on-objects functor src -> dst given by its arrow map."""

    model_config = ConfigDict(frozen=True)

    src: FinCat
    dst: FinCat
    arrow_map: Dict[Arrow, Arrow] = {}

    def __call__(self, f: Arrow) -> Arrow:
        return self.arrow_map[f]


def check_functor(j: IooFunctor) -> CheckResult:
    """Identity on objects, typing, identities and composition preserved."""
    if tuple(j.src.objects) != tuple(j.dst.objects):
        return CheckResult.failed("objects", src=j.src.objects, dst=j.dst.objects)
    for f, ends in j.src.arrows.items():
        image = j.arrow_map.get(f)
        if image is None or j.dst.arrows.get(image) != ends:
            return CheckResult.failed("typing", arrow=f, image=image)
    for a in j.src.objects:
        if j.arrow_map[j.src.id(a)] != j.dst.id(a):
            return CheckResult.failed("identity", object=a)
    for g, f in j.src.composable_pairs():
        if j.arrow_map[j.src.compose(g, f)] != j.dst.compose(j.arrow_map[g], j.arrow_map[f]):
            return CheckResult.failed("composition", g=g, f=f)
    return CheckResult.passed("functor")


def make_functor(src: FinCat, dst: FinCat, arrow_map: Mapping[Arrow, Arrow]) -> IooFunctor:
    """
    Raises:
        LawViolationError: the map is not an identity-on-objects functor
    """
    j = IooFunctor(src=src, dst=dst, arrow_map=dict(arrow_map))
    result = check_functor(j)
    if not result.ok:
        raise LawViolationError(
            f"Arrow map is not a functor ({result.law}): {result.witness}",
            law=result.law,
            witness=result.witness,
        )
    return j


def identity_functor(c: FinCat) -> IooFunctor:
    return IooFunctor(src=c, dst=c, arrow_map={f: f for f in c.arrows})
