"""
Budgeted enumeration helpers shared by ends, natural transformations and
internal homs.
"""

import itertools
import logging
from typing import Any, Callable, Dict, Hashable, Iterator, List, Sequence, Tuple, Type

from .._base.exceptions import BudgetExceededError

logger = logging.getLogger(__name__)

Predicate = Callable[[Dict[Hashable, Any]], bool]


def function_space(
    domain: Sequence[Hashable],
    codomain: Sequence[Any],
    budget: int,
    error: Type[BudgetExceededError] = BudgetExceededError,
) -> List[Dict[Hashable, Any]]:
    """
    All functions domain -> codomain as dicts.

    Raises:
        error: when |codomain| ** |domain| exceeds the budget
    """
    domain = list(domain)
    codomain = list(codomain)
    size = len(codomain) ** len(domain)
    if size > budget:
        raise error(
            f"Function space {len(codomain)}^{len(domain)} = {size} exceeds budget {budget}",
            limit=budget,
        )
    return [dict(zip(domain, images)) for images in itertools.product(codomain, repeat=len(domain))]


def enumerate_families(
    components: Dict[Hashable, Sequence[Any]],
    constraints: Sequence[Tuple[Tuple[Hashable, ...], Predicate]],
    budget: int,
    error: Type[BudgetExceededError] = BudgetExceededError,
) -> Iterator[Dict[Hashable, Any]]:
    """
    Enumerate assignments key -> candidate satisfying every constraint.

    Each constraint names the component keys it reads; it is checked as soon
    as all of them are assigned. Single-key constraints prune candidates up
    front. The number of visited search nodes is bounded by the budget.
    """
    keys = list(components)
    pruned: Dict[Hashable, List[Any]] = {}
    for key in keys:
        local = [pred for deps, pred in constraints if set(deps) == {key}]
        pruned[key] = [
            cand for cand in components[key] if all(pred({key: cand}) for pred in local)
        ]

    # Assign small components first so constraints fire early
    keys.sort(key=lambda k: len(pruned[k]))
    position = {k: i for i, k in enumerate(keys)}
    checks: List[List[Predicate]] = [[] for _ in keys]
    for deps, pred in constraints:
        if len(set(deps)) <= 1:
            continue
        last = max(position[d] for d in deps)
        checks[last].append(pred)

    visited = 0
    assignment: Dict[Hashable, Any] = {}

    def search(i: int) -> Iterator[Dict[Hashable, Any]]:
        nonlocal visited
        if i == len(keys):
            yield dict(assignment)
            return
        key = keys[i]
        for cand in pruned[key]:
            visited += 1
            if visited > budget:
                raise error(
                    f"Family enumeration exceeded budget {budget}", limit=budget
                )
            assignment[key] = cand
            if all(pred(assignment) for pred in checks[i]):
                yield from search(i + 1)
            del assignment[key]

    yield from search(0)
    logger.debug(f"Family enumeration visited {visited} nodes over {len(keys)} components")
