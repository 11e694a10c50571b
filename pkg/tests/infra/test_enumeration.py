import pytest

from preopt._base.exceptions import BudgetExceededError
from preopt.fincat import SizeExceededError
from preopt.infra import enumerate_families, function_space


def test_function_space_counts_all_functions():
    functions = function_space(["x", "y"], [0, 1, 2], budget=100)
    assert len(functions) == 9
    assert {"x": 2, "y": 0} in functions


def test_function_space_on_empty_domain_has_one_function():
    assert function_space([], [0, 1], budget=1) == [{}]


def test_function_space_over_budget_raises():
    with pytest.raises(BudgetExceededError) as exc:
        function_space(range(4), range(3), budget=80)
    assert exc.value.limit == 80


def test_function_space_uses_the_given_error_type():
    with pytest.raises(SizeExceededError):
        function_space(range(3), range(3), budget=10, error=SizeExceededError)


def test_enumerate_families_applies_constraints():
    components = {"a": [0, 1, 2], "b": [0, 1, 2]}
    constraints = [
        (("a",), lambda s: s["a"] != 0),
        (("a", "b"), lambda s: s["a"] + s["b"] == 3),
    ]
    families = list(enumerate_families(components, constraints, budget=100))
    assert sorted((f["a"], f["b"]) for f in families) == [(1, 2), (2, 1)]


def test_enumerate_families_over_budget_raises():
    components = {k: range(5) for k in range(4)}
    with pytest.raises(BudgetExceededError):
        list(enumerate_families(components, [], budget=50))
