"""
Seeded randomized law suites shared by `preopt laws` and the tests.

A suite case draws one instance and returns None when the law holds or a
dictionary of printable literals describing the violation.
"""

import logging
from itertools import product
from typing import Any, Callable, Dict, Optional, Sequence

import numpy as np

from ..config import get_settings
from ..constants import ExampleNames, Suites
from ..diagram import (
    Diagram,
    compose,
    enumerate_class,
    equal,
    exact_normal_form,
    format_diagram,
    generator_diagram,
    greedy_normal_form,
    is_central,
    normal_form,
    tensor_seq,
    whisker,
)
from ..diagram.schemas import TensorOrder
from ..fincat import resolve_example, verify_effectful
from ..optic import (
    eval_comb,
    optic_equal,
    optic_id,
    optic_new,
    parts_equal,
    substitute,
    unit_element,
    unit_equal,
)
from ..signature import HoleSpec, Signature, format_word, running_signature
from .exceptions import UnknownSuiteError
from .generators import (
    identity_on,
    make_rng,
    mutate_centrality,
    random_class_member,
    random_diagram,
    random_horizontal,
    random_optic,
    random_optic_chain,
    random_word,
    with_diagram,
)
from .schemas import SuiteResult

logger = logging.getLogger(__name__)

Counterexample = Optional[Dict[str, Any]]
SuiteCase = Callable[[np.random.Generator, Signature, int, Optional[int]], Counterexample]

FINCAT_EXAMPLES = [
    ExampleNames.TRIVIAL,
    ExampleNames.DISCRETE_PREFIX + "2",
    ExampleNames.WALKING_ARROW,
    ExampleNames.WRITER_Z2,
    ExampleNames.WRITER_M3,
]


def _lit(d: Diagram) -> str:
    return format_diagram(d)


def interchange_case(rng, sig, index, budget) -> Counterexample:
    """Whiskered single-generator pairs interchange iff one of them is central."""
    names = sorted(sig.generators)
    pairs = list(product(names, names))
    first, second = pairs[index % len(pairs)]
    d1, d2 = generator_diagram(sig, first), generator_diagram(sig, second)
    left, right = random_word(rng, sig, 0, 1), random_word(rng, sig, 0, 1)
    lf = whisker(left, tensor_seq(d1, d2, TensorOrder.LEFT_FIRST), right)
    rf = whisker(left, tensor_seq(d1, d2, TensorOrder.RIGHT_FIRST), right)
    expected = sig.generators[first].central or sig.generators[second].central
    got = equal(lf, rf, budget)
    if got != expected:
        return {"left_first": _lit(lf), "right_first": _lit(rf), "expected": expected, "got": got}
    return None


def normal_form_case(rng, sig, index, budget) -> Counterexample:
    """Greedy and exact normal forms agree; `equal` is an equivalence and a congruence."""
    c = random_diagram(rng, sig, random_word(rng, sig), max_slices=2)
    d1 = random_diagram(rng, sig, c.cod)
    greedy, exact = greedy_normal_form(d1), exact_normal_form(d1, budget)
    if greedy.slices != exact.slices:
        return {"law": "greedy", "diagram": _lit(d1), "greedy": _lit(greedy), "exact": _lit(exact)}
    nf = normal_form(d1, budget)
    if normal_form(nf, budget).slices != nf.slices:
        return {"law": "idempotence", "diagram": _lit(d1)}

    members = enumerate_class(d1, budget)
    names = sorted(s.name for s in d1.slices)
    for m in members:
        if m.cod != d1.cod or sorted(s.name for s in m.slices) != names:
            return {"law": "class_invariants", "diagram": _lit(d1), "member": _lit(m)}

    d2 = random_class_member(rng, d1, budget)
    d3 = random_class_member(rng, d1, budget)
    if not (equal(d1, d2, budget) and equal(d2, d1, budget) and equal(d2, d3, budget) and equal(d1, d3, budget)):
        return {"law": "equivalence", "diagrams": [_lit(d1), _lit(d2), _lit(d3)]}

    e = random_diagram(rng, sig, d1.cod, max_slices=2)
    if not equal(compose(compose(c, d1), e), compose(compose(c, d2), e), budget):
        return {"law": "composition", "diagrams": [_lit(c), _lit(d1), _lit(d2), _lit(e)]}
    left, right = random_word(rng, sig, 0, 1), random_word(rng, sig, 0, 1)
    if not equal(whisker(left, d1, right), whisker(left, d2, right), budget):
        return {
            "law": "whiskering",
            "diagrams": [_lit(d1), _lit(d2)],
            "left": format_word(left),
            "right": format_word(right),
        }

    other = random_diagram(rng, sig, d1.dom)
    if equal(d1, other, budget) != (members == enumerate_class(other, budget)):
        return {"law": "class_sets", "diagrams": [_lit(d1), _lit(other)]}
    return None


def optic_case(rng, sig, index, budget) -> Counterexample:
    """Hole-encoded equality agrees with the parts-representation search."""
    o1 = random_optic(rng, sig)
    mode = int(rng.integers(3))
    if mode == 0:
        o2 = with_diagram(o1, random_class_member(rng, o1.under, budget))
    else:
        mutated = mutate_centrality(rng, o1.under)
        o2 = o1 if mutated is None else with_diagram(o1, mutated)
        if mode == 2:
            o2 = with_diagram(o2, random_class_member(rng, o2.under, budget))
    encoded = optic_equal(o1, o2, budget)
    oracle = parts_equal(o1, o2, budget)
    if encoded != oracle or (mode == 0 and not encoded):
        return {
            "optics": [_lit(o1.under), _lit(o2.under)],
            "optic_equal": encoded,
            "parts_equal": oracle,
        }
    return None


def optic_laws_case(rng, sig, index, budget) -> Counterexample:
    """Substitution is associative, unital and respects optic equality."""
    o1, o2, o3 = random_optic_chain(rng, sig, random_word(rng, sig, 1, 2), 3)
    witness = {"optics": [_lit(o1.under), _lit(o2.under), _lit(o3.under)]}

    nested_left = substitute(substitute(o1, 0, o2), 0, o3)
    nested_right = substitute(o1, 0, substitute(o2, 0, o3))
    if not optic_equal(nested_left, nested_right, budget):
        return {"law": "associativity", **witness}
    if not optic_equal(substitute(optic_id(o1.src, o1.sig), 0, o1), o1, budget):
        return {"law": "left_unit", **witness}
    if not optic_equal(substitute(o1, 0, optic_id(o1.dst, o1.sig)), o1, budget):
        return {"law": "right_unit", **witness}

    o1b = with_diagram(o1, random_class_member(rng, o1.under, budget))
    o2b = with_diagram(o2, random_class_member(rng, o2.under, budget))
    if not optic_equal(substitute(o1, 0, o2), substitute(o1b, 0, o2b), budget):
        return {"law": "congruence", **witness, "variants": [_lit(o1b.under), _lit(o2b.under)]}
    return None


def horizontal_case(rng, sig, index, budget) -> Counterexample:
    """Both fill orders agree iff one of the two fills is central."""
    drawn = random_horizontal(rng, sig)
    if drawn is None:
        return None
    comb, fills = drawn
    ab = eval_comb(comb, fills, [0, 1])
    ba = eval_comb(comb, fills, [1, 0])
    expected = is_central(fills[0]) or is_central(fills[1])
    got = equal(ab, ba, budget)
    if got != expected:
        return {
            "comb": _lit(comb.under),
            "fills": {str(k): _lit(v) for k, v in sorted(fills.items())},
            "expected": expected,
            "got": got,
        }
    return None


def unit_case(rng, sig, index, budget) -> Counterexample:
    """A slice crosses the barrier iff it is central; dissolving the cut composes."""
    p = random_diagram(rng, sig, random_word(rng, sig), max_slices=2)
    t = random_diagram(rng, sig, p.cod, length=1)
    if not t.slices:
        return None
    q = random_diagram(rng, sig, t.cod, max_slices=2)
    u1 = unit_element(compose(p, t), q)
    u2 = unit_element(p, compose(t, q))
    expected = is_central(t)
    got = unit_equal(u1, u2, budget)
    witness = {"units": [_lit(u1.under), _lit(u2.under)]}
    if got != expected:
        return {"law": "barrier_crossing", **witness, "expected": expected, "got": got}

    direct = compose(compose(p, t), q)
    dissolved = eval_comb(u1, {})
    if not equal(dissolved, direct, budget):
        return {"law": "dissolve", **witness, "dissolved": _lit(dissolved)}

    x, y = random_word(rng, sig, 0, 1), random_word(rng, sig, 0, 1)
    hole = HoleSpec(in_type=direct.dom, out_type=direct.cod, slot_label=0)
    g = random_diagram(rng, sig, x + direct.cod + y, max_slices=2)
    outer = optic_new(identity_on(sig, x + direct.dom + y), len(x), hole, g)
    filled = eval_comb(outer, {0: dissolved})
    if not equal(filled, compose(whisker(x, direct, y), g), budget):
        return {"law": "unit_law", **witness, "outer": _lit(outer.under)}
    return None


CASES: Dict[str, SuiteCase] = {
    Suites.INTERCHANGE: interchange_case,
    Suites.NORMAL_FORM: normal_form_case,
    Suites.OPTIC: optic_case,
    Suites.OPTIC_LAWS: optic_laws_case,
    Suites.HORIZONTAL: horizontal_case,
    Suites.UNIT: unit_case,
}


def fincat_suite(
    seed: int = 0,
    budget: Optional[int] = None,
    examples: Sequence[str] = FINCAT_EXAMPLES,
) -> SuiteResult:
    """Every fincat checker on every named example; exhaustive, so the seed is only recorded."""
    checked = 0
    for name in examples:
        results = verify_effectful(resolve_example(name), budget=budget)
        for check, result in results.items():
            checked += 1
            if not result.ok:
                logger.info(f"Suite {Suites.FINCAT} failed on {name}: {check}")
                return SuiteResult(
                    suite=Suites.FINCAT,
                    passed=False,
                    seed=seed,
                    iterations=checked,
                    counterexample={"example": name, "check": check, **result.to_dict()},
                )
    return SuiteResult(suite=Suites.FINCAT, passed=True, seed=seed, iterations=checked)


def run_suite(
    name: str,
    seed: Optional[int] = None,
    iters: Optional[int] = None,
    budget: Optional[int] = None,
    sig: Optional[Signature] = None,
) -> SuiteResult:
    """
    Run one suite for `iters` seeded instances, stopping at the first
    counterexample.

    Raises:
        UnknownSuiteError: `name` is not a registered suite
    """
    settings = get_settings()
    seed = settings.default_seed if seed is None else seed
    iters = settings.default_iters if iters is None else iters
    if name == Suites.FINCAT:
        return fincat_suite(seed, budget)
    if name not in CASES:
        raise UnknownSuiteError(f"Unknown suite {name!r}; expected one of {Suites.ALL_SUITES}")

    case = CASES[name]
    rng = make_rng(seed)
    sig = running_signature() if sig is None else sig
    for index in range(iters):
        counterexample = case(rng, sig, index, budget)
        if counterexample is not None:
            logger.info(f"Suite {name} failed at iteration {index + 1} (seed {seed})")
            return SuiteResult(
                suite=name,
                passed=False,
                seed=seed,
                iterations=index + 1,
                counterexample=counterexample,
            )
    logger.info(f"Suite {name} passed {iters} iterations (seed {seed})")
    return SuiteResult(suite=name, passed=True, seed=seed, iterations=iters)
