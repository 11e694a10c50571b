import pytest

from preopt.constants import Suites
from preopt.fincat import CheckResult
from preopt.laws import UnknownSuiteError, fincat_suite, run_suite
from preopt.laws import suites


@pytest.mark.parametrize(
    "name",
    [Suites.INTERCHANGE, Suites.NORMAL_FORM, Suites.OPTIC, Suites.OPTIC_LAWS, Suites.HORIZONTAL, Suites.UNIT],
)
@pytest.mark.parametrize("seed", [0, 11])
def test_suites_pass(name, seed):
    result = run_suite(name, seed=seed, iters=25)
    assert result.passed, result.counterexample
    assert result.iterations == 25
    assert result.counterexample is None


@pytest.mark.parametrize(
    "name, iters",
    [
        (Suites.NORMAL_FORM, 500),
        (Suites.OPTIC, 200),
        (Suites.OPTIC_LAWS, 200),
        (Suites.HORIZONTAL, 100),
    ],
)
def test_suites_at_full_strength(name, iters):
    result = run_suite(name, seed=2024, iters=iters)
    assert result.passed, result.counterexample
    assert result.iterations == iters


def test_suite_runs_are_reproducible():
    first = run_suite(Suites.OPTIC, seed=5, iters=10)
    second = run_suite(Suites.OPTIC, seed=5, iters=10)
    assert first.to_dict() == second.to_dict()


def test_iterations_and_seed_default_to_settings(monkeypatch):
    monkeypatch.setenv("PREOPT_ITERS", "3")
    monkeypatch.setenv("PREOPT_SEED", "9")
    result = run_suite(Suites.INTERCHANGE)
    assert result.iterations == 3
    assert result.seed == 9


def test_first_counterexample_stops_the_run(monkeypatch):
    def broken(rng, sig, index, budget):
        return {"index": index} if index == 2 else None

    monkeypatch.setitem(suites.CASES, Suites.UNIT, broken)
    result = run_suite(Suites.UNIT, seed=0, iters=10)
    assert not result.passed
    assert result.iterations == 3
    assert result.to_dict()["counterexample"] == {"index": 2}


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("associahedron")


def test_fincat_suite_on_trivial_example():
    result = fincat_suite(seed=4, examples=["trivial"])
    assert result.passed
    assert result.seed == 4
    assert result.iterations == 15


def test_fincat_suite_reports_the_failing_check(monkeypatch):

    monkeypatch.setattr(
        suites,
        "verify_effectful",
        lambda eff, budget=None: {"coend": CheckResult.failed("extranaturality", arrow="f")},
    )
    result = fincat_suite(examples=["trivial"])
    assert not result.passed
    assert result.counterexample["example"] == "trivial"
    assert result.counterexample["check"] == "coend"
    assert result.counterexample["law"] == "extranaturality"
