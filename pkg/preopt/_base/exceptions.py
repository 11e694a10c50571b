"""
Base exceptions for preopt.
"""

from typing import Optional, Tuple


class PreoptError(Exception):
    """Base exception for all preopt errors."""

    def __init__(
        self,
        message: str,
        exit_code: int = 2,
        span: Optional[Tuple[int, int]] = None,
    ):
        super().__init__(message)
        self.exit_code = exit_code
        self.span = span

    @property
    def kind(self) -> str:
        """Short error name used in JSON error objects."""
        name = self.__class__.__name__
        return name[: -len("Error")] if name.endswith("Error") else name

    def to_dict(self) -> dict:
        payload = {"error": self.kind, "message": str(self)}
        if self.span is not None:
            payload["line"], payload["column"] = self.span
        return payload


class BudgetExceededError(PreoptError):
    """Raised when an exact enumeration would exceed the configured budget."""

    def __init__(self, message: str = "Budget exceeded", limit: int = None):
        super().__init__(message)
        self.limit = limit
