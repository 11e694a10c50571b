"""
Strict premonoidal structure on a finite category, and finite monoids.
"""

import logging
from typing import Any, Callable, Dict, Iterable, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from .category import Arrow, FinCat, Obj, discrete_category, terminal_category, walking_arrow
from .exceptions import LawViolationError
from .schemas import CheckResult

logger = logging.getLogger(__name__)


class MonStructure(BaseModel):
    """
    Object tensor, unit and the two whiskering tables of a strict
    premonoidal category.

    left[(a, f)] is a ⋉ f and right[(f, a)] is f ⋊ a.
    """

    model_config = ConfigDict(frozen=True)

    category: FinCat
    tensor: Dict[Tuple[Obj, Obj], Obj] = {}
    unit: Obj = None
    left: Dict[Tuple[Obj, Arrow], Arrow] = {}
    right: Dict[Tuple[Arrow, Obj], Arrow] = {}

    def ten(self, *objs: Obj) -> Obj:
        result = self.unit
        for a in objs:
            result = self.tensor[(result, a)]
        return result

    def lwhisker(self, a: Obj, f: Arrow) -> Arrow:
        return self.left[(a, f)]

    def rwhisker(self, f: Arrow, a: Obj) -> Arrow:
        return self.right[(f, a)]

    def whisker(self, left: Obj, f: Arrow, right: Obj) -> Arrow:
        """left ⋉ f ⋊ right."""
        return self.rwhisker(self.lwhisker(left, f), right)

    def tensor_arrows(self, f: Arrow, g: Arrow) -> Arrow:
        """f ⊗ g, running g first then f (only meaningful when one side is central)."""
        c = self.category
        a = c.dom(f)
        b2 = c.cod(g)
        return c.compose(self.rwhisker(f, b2), self.lwhisker(a, g))


def check_mon_structure(mon: MonStructure) -> CheckResult:
    """Strict associativity and units on objects, whiskering functorial in each argument."""
    c = mon.category
    objs = c.objects
    for a in objs:
        if mon.tensor.get((mon.unit, a)) != a or mon.tensor.get((a, mon.unit)) != a:
            return CheckResult.failed("unit", object=a)
        for b in objs:
            for d in objs:
                if mon.ten(mon.tensor[(a, b)], d) != mon.tensor[(a, mon.tensor[(b, d)])]:
                    return CheckResult.failed("associativity", a=a, b=b, c=d)
    for a in objs:
        for f in c.sorted_arrows:
            x, y = c.arrows[f]
            lf, rf = mon.left.get((a, f)), mon.right.get((f, a))
            if lf is None or c.arrows.get(lf) != (mon.tensor[(a, x)], mon.tensor[(a, y)]):
                return CheckResult.failed("typing", side="left", object=a, arrow=f)
            if rf is None or c.arrows.get(rf) != (mon.tensor[(x, a)], mon.tensor[(y, a)]):
                return CheckResult.failed("typing", side="right", object=a, arrow=f)
        for b in objs:
            if mon.left[(a, c.id(b))] != c.id(mon.tensor[(a, b)]):
                return CheckResult.failed("identity", side="left", object=a, on=b)
            if mon.right[(c.id(b), a)] != c.id(mon.tensor[(b, a)]):
                return CheckResult.failed("identity", side="right", object=a, on=b)
        for g, f in c.composable_pairs():
            gf = c.compose(g, f)
            if mon.left[(a, gf)] != c.compose(mon.left[(a, g)], mon.left[(a, f)]):
                return CheckResult.failed("functoriality", side="left", object=a, g=g, f=f)
            if mon.right[(gf, a)] != c.compose(mon.right[(g, a)], mon.right[(f, a)]):
                return CheckResult.failed("functoriality", side="right", object=a, g=g, f=f)
    for f in c.sorted_arrows:
        if mon.left[(mon.unit, f)] != f or mon.right[(f, mon.unit)] != f:
            return CheckResult.failed("unit_whiskering", arrow=f)
        for a in objs:
            for b in objs:
                ab = mon.tensor[(a, b)]
                if mon.left[(a, mon.left[(b, f)])] != mon.left[(ab, f)]:
                    return CheckResult.failed("whisker_associativity", side="left", a=a, b=b, arrow=f)
                if mon.right[(mon.right[(f, a)], b)] != mon.right[(f, ab)]:
                    return CheckResult.failed("whisker_associativity", side="right", a=a, b=b, arrow=f)
                if mon.left[(a, mon.right[(f, b)])] != mon.right[(mon.left[(a, f)], b)]:
                    return CheckResult.failed("whisker_associativity", side="middle", a=a, b=b, arrow=f)
    return CheckResult.passed("premonoidal")


def make_mon_structure(
    category: FinCat,
    tensor: Callable[[Obj, Obj], Obj],
    unit: Obj,
    left: Callable[[Obj, Arrow], Arrow],
    right: Callable[[Arrow, Obj], Arrow],
) -> MonStructure:
    """
    Tabulate and validate a strict premonoidal structure.

    Raises:
        LawViolationError: a structural law fails
    """
    objs = category.objects
    mon = MonStructure(
        category=category,
        tensor={(a, b): tensor(a, b) for a in objs for b in objs},
        unit=unit,
        left={(a, f): left(a, f) for a in objs for f in category.arrows},
        right={(f, a): right(f, a) for a in objs for f in category.arrows},
    )
    result = check_mon_structure(mon)
    if not result.ok:
        raise LawViolationError(
            f"Premonoidal structure violates {result.law}: {result.witness}",
            law=result.law,
            witness=result.witness,
        )
    return mon


def interchange_witness(mon: MonStructure) -> Optional[Dict[str, Any]]:
    """
    The first pair f: a -> a', g: b -> b' whose two interleavings differ,
    or None when the structure is monoidal.
    """
    c = mon.category
    for f in c.sorted_arrows:
        a, a2 = c.arrows[f]
        for g in c.sorted_arrows:
            b, b2 = c.arrows[g]
            left_first = c.compose(mon.right[(f, b2)], mon.left[(a, g)])
            right_first = c.compose(mon.left[(a2, g)], mon.right[(f, b)])
            if left_first != right_first:
                return {"f": f, "g": g, "left_first": left_first, "right_first": right_first}
    return None


def is_monoidal(mon: MonStructure) -> bool:
    return interchange_witness(mon) is None


def is_central_arrow(mon: MonStructure, f: Arrow) -> bool:
    """f interchanges with every arrow on both sides."""
    c = mon.category
    a, a2 = c.arrows[f]
    for g in c.sorted_arrows:
        b, b2 = c.arrows[g]
        if c.compose(mon.right[(f, b2)], mon.left[(a, g)]) != c.compose(
            mon.left[(a2, g)], mon.right[(f, b)]
        ):
            return False
        if c.compose(mon.left[(b2, f)], mon.right[(g, a)]) != c.compose(
            mon.right[(g, a2)], mon.left[(b, f)]
        ):
            return False
    return True


class FinMonoid(BaseModel):
    """A finite monoid by multiplication table."""

    model_config = ConfigDict(frozen=True)

    elements: Tuple[Any, ...] = ()
    table: Dict[Tuple[Any, Any], Any] = {}
    unit: Any = None
    name: str = ""

    def mul(self, x: Any, y: Any) -> Any:
        return self.table[(x, y)]

    @property
    def is_commutative(self) -> bool:
        return all(self.mul(x, y) == self.mul(y, x) for x in self.elements for y in self.elements)


def make_monoid(
    elements: Iterable[Any], mul: Callable[[Any, Any], Any], unit: Any, name: str = ""
) -> FinMonoid:
    """
    Raises:
        LawViolationError: closure, unit or associativity fails (27 checks for
            a three-element monoid)
    """
    elements = tuple(elements)
    table = {(x, y): mul(x, y) for x in elements for y in elements}
    for (x, y), xy in table.items():
        if xy not in elements:
            raise LawViolationError(f"{x}*{y} = {xy} leaves the carrier", law="closure", witness={"x": x, "y": y})
    for x in elements:
        if table[(unit, x)] != x or table[(x, unit)] != x:
            raise LawViolationError(f"{unit} is not a unit at {x}", law="unit", witness={"x": x})
    for x in elements:
        for y in elements:
            for z in elements:
                if table[(table[(x, y)], z)] != table[(x, table[(y, z)])]:
                    raise LawViolationError(
                        f"Monoid {name} is not associative at ({x}, {y}, {z})",
                        law="associativity",
                        witness={"x": x, "y": y, "z": z},
                    )
    return FinMonoid(elements=elements, table=table, unit=unit, name=name)


def left_zero_monoid() -> FinMonoid:
    """{e, a, b}: e is the unit and x*y = x for x, y in {a, b}."""

    def mul(x, y):
        if x == "e":
            return y
        return x

    return make_monoid(["e", "a", "b"], mul, "e", name="M3")


def cyclic_monoid(n: int = 2) -> FinMonoid:
    return make_monoid(range(n), lambda x, y: (x + y) % n, 0, name=f"Z{n}")


def terminal_monoidal() -> MonStructure:
    c = terminal_category()
    return make_mon_structure(c, lambda a, b: "*", "*", lambda a, f: f, lambda f, a: f)


def discrete_monoidal(n: int) -> MonStructure:
    """Discrete category on 0..n-1 with addition mod n."""
    c = discrete_category(n)
    return make_mon_structure(
        c,
        lambda a, b: (a + b) % n,
        0,
        lambda a, f: ("id", (a + f[1]) % n),
        lambda f, a: ("id", (f[1] + a) % n),
    )


def walking_arrow_monoidal() -> MonStructure:
    """0 -> 1 with tensor min and unit 1."""
    c = walking_arrow()
    return make_mon_structure(
        c,
        min,
        1,
        lambda a, f: (min(a, f[0]), min(a, f[1])),
        lambda f, a: (min(f[0], a), min(f[1], a)),
    )
