"""
Custom exceptions for finite categories and profunctors.
"""

from typing import Any, Dict, Optional

from .._base.exceptions import BudgetExceededError, PreoptError


class FinCatError(PreoptError):
    pass


class LawViolationError(FinCatError):
    """A table fails a category, functor, monoid or module law."""

    def __init__(
        self,
        message: str = "Law violation",
        law: str = "",
        witness: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, exit_code=1)
        self.law = law
        self.witness = witness or {}

    def to_dict(self) -> dict:
        payload = super().to_dict()
        payload["law"] = self.law
        payload["witness"] = {k: repr(v) for k, v in self.witness.items()}
        return payload


class SizeExceededError(BudgetExceededError, FinCatError):
    """An end, coend or function space would exceed the enumeration budget."""

    pass
