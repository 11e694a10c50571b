"""
Named effectful categories for the `fincat` command and the tests.
"""

import logging
from typing import Iterable

from ..constants import ExampleNames
from .effectful import EffectfulCategory, identity_effectful, make_writer_effectful
from .exceptions import FinCatError
from .monoidal import (
    cyclic_monoid,
    discrete_monoidal,
    left_zero_monoid,
    terminal_monoidal,
    walking_arrow_monoidal,
)

logger = logging.getLogger(__name__)

MONOIDS = {
    "M3": left_zero_monoid,
    "Z2": lambda: cyclic_monoid(2),
}


def resolve_example(name: str, universe: Iterable[int] = (0, 1)) -> EffectfulCategory:
    """
    Build a named example: `writer:M3`, `writer:Z2`, `walking-arrow`,
    `trivial` or `discrete:N`.

    Raises:
        FinCatError: the name is unknown or malformed
    """
    if name.startswith(ExampleNames.WRITER_PREFIX):
        key = name[len(ExampleNames.WRITER_PREFIX) :]
        if key not in MONOIDS:
            raise FinCatError(f"Unknown writer monoid {key!r}; expected one of {sorted(MONOIDS)}")
        return make_writer_effectful(MONOIDS[key](), universe)
    if name == ExampleNames.WALKING_ARROW:
        return identity_effectful(walking_arrow_monoidal())
    if name == ExampleNames.TRIVIAL:
        return identity_effectful(terminal_monoidal())
    if name.startswith(ExampleNames.DISCRETE_PREFIX):
        size = name[len(ExampleNames.DISCRETE_PREFIX) :]
        if not size.isdigit() or int(size) < 1:
            raise FinCatError(f"Malformed example {name!r}; expected discrete:N with N >= 1")
        return identity_effectful(discrete_monoidal(int(size)))
    raise FinCatError(f"Unknown example {name!r}")
