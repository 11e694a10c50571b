"""
Constants for preopt.
"""

from .fincat import Checks, ExampleNames, FunnySides
from .laws import Suites
from .slice_kinds import ReservedNames, SliceKinds, SwapCases

__all__ = [
    "SliceKinds",
    "ReservedNames",
    "SwapCases",
    "FunnySides",
    "ExampleNames",
    "Checks",
    "Suites",
]
