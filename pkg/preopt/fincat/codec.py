"""
JSON-friendly encoding of finite categories, monoids and profunctors.

    {"name": "...", "objects": [...], "arrows": [[id, dom, cod], ...],
     "comp": [[g, f, g_after_f], ...], "ids": [[object, id], ...]}

JSON arrays decode to tuples so decoded values stay hashable.
"""

from typing import Any, Dict

from .category import FinCat, make_fincat
from .exceptions import FinCatError
from .monoidal import FinMonoid, make_monoid
from .profunctor import FinProfunctor, make_profunctor


def _freeze(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


def _thaw(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_thaw(v) for v in value]
    return value


def fincat_to_dict(c: FinCat) -> Dict[str, Any]:
    return {
        "name": c.name,
        "objects": [_thaw(a) for a in c.objects],
        "arrows": [[_thaw(f), _thaw(c.dom(f)), _thaw(c.cod(f))] for f in c.sorted_arrows],
        "comp": [[_thaw(g), _thaw(f), _thaw(c.compose(g, f))] for g, f in c.composable_pairs()],
        "ids": [[_thaw(a), _thaw(c.id(a))] for a in c.objects],
    }


def fincat_from_dict(data: Dict[str, Any]) -> FinCat:
    """
    Raises:
        FinCatError: a required key is missing or malformed
        LawViolationError: the decoded tables fail a category law
    """
    try:
        objects = [_freeze(a) for a in data["objects"]]
        arrows = {_freeze(f): (_freeze(a), _freeze(b)) for f, a, b in data["arrows"]}
        comp = {(_freeze(g), _freeze(f)): _freeze(h) for g, f, h in data["comp"]}
        ids = {_freeze(a): _freeze(f) for a, f in data["ids"]}
    except (KeyError, TypeError, ValueError) as e:
        raise FinCatError(f"Malformed category document: {e}") from e
    return make_fincat(objects, arrows, comp, ids, name=data.get("name", ""))


def monoid_from_dict(data: Dict[str, Any]) -> FinMonoid:
    """{"name", "elements", "unit", "table": [[x, y, x*y], ...]}"""
    try:
        table = {(_freeze(x), _freeze(y)): _freeze(z) for x, y, z in data["table"]}
        elements = [_freeze(x) for x in data["elements"]]
        unit = _freeze(data["unit"])
    except (KeyError, TypeError, ValueError) as e:
        raise FinCatError(f"Malformed monoid document: {e}") from e
    missing = [(x, y) for x in elements for y in elements if (x, y) not in table]
    if missing:
        raise FinCatError(f"Monoid table has no entry for {missing[0]}")
    return make_monoid(elements, lambda x, y: table[(x, y)], unit, name=data.get("name", ""))


def profunctor_from_dict(data: Dict[str, Any], src: FinCat, dst: FinCat) -> FinProfunctor:
    """
    {"values": [[d, c, [x, ...]], ...], "lact": [[u, c, x, y], ...],
     "ract": [[v, d, x, y], ...]}
    """
    try:
        values = {(_freeze(d), _freeze(c)): [_freeze(x) for x in xs] for d, c, xs in data["values"]}
        lact = {(_freeze(u), _freeze(c), _freeze(x)): _freeze(y) for u, c, x, y in data["lact"]}
        ract = {(_freeze(v), _freeze(d), _freeze(x)): _freeze(y) for v, d, x, y in data["ract"]}
    except (KeyError, TypeError, ValueError) as e:
        raise FinCatError(f"Malformed profunctor document: {e}") from e
    try:
        return make_profunctor(
            src,
            dst,
            value=lambda d, c: values.get((d, c), []),
            lact=lambda u, c, x: lact[(u, c, x)],
            ract=lambda v, d, x: ract[(v, d, x)],
            name=data.get("name", ""),
        )
    except KeyError as e:
        raise FinCatError(f"Profunctor action table has no entry for {e}") from e
