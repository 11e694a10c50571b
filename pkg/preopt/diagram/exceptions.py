"""
Custom exceptions for diagrams and the interchange congruence.
"""

from .._base.exceptions import PreoptError, BudgetExceededError


class DiagramError(PreoptError):
    pass


class TypeMismatchError(DiagramError):
    """A slice, composite or fill does not fit the wires it is placed on."""

    def __init__(self, message: str = "Type mismatch", index: int = None, span=None):
        super().__init__(message, span=span)
        self.index = index


class SignatureMismatchError(DiagramError):
    pass


class NotSwappableError(DiagramError):
    pass


class ClassBudgetExceededError(BudgetExceededError, DiagramError):
    """The congruence class is larger than the enumeration budget."""

    pass
