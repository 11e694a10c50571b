"""
Seeded random generators and the randomized law suites.
"""

from .exceptions import LawSuiteError, UnknownSuiteError
from .generators import (
    make_rng,
    mutate_centrality,
    random_class_member,
    random_diagram,
    random_horizontal,
    random_optic,
    random_optic_chain,
    random_word,
)
from .schemas import SuiteResult
from .suites import CASES, FINCAT_EXAMPLES, fincat_suite, run_suite

__all__ = [
    "LawSuiteError",
    "UnknownSuiteError",
    "make_rng",
    "mutate_centrality",
    "random_class_member",
    "random_diagram",
    "random_horizontal",
    "random_optic",
    "random_optic_chain",
    "random_word",
    "SuiteResult",
    "CASES",
    "FINCAT_EXAMPLES",
    "fincat_suite",
    "run_suite",
]
