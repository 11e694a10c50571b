"""
Custom exceptions for the law suites.
"""

from .._base.exceptions import PreoptError


class LawSuiteError(PreoptError):
    pass


class UnknownSuiteError(LawSuiteError):
    """Raised when `laws --suite` names no registered suite."""

    pass
