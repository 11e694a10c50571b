"""
Custom exceptions for optics and combs.
"""

from .._base.exceptions import PreoptError


class OpticError(PreoptError):
    pass


class UnknownSlotError(OpticError):
    """A slot label does not name a hole of the comb."""

    def __init__(self, message: str = "Unknown slot", slot: int = None):
        super().__init__(message)
        self.slot = slot
