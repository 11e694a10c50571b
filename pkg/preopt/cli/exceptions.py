"""
Custom exceptions for the command-line surface and the DSL parser.
"""

from typing import Optional, Tuple

from .._base.exceptions import PreoptError


class CliError(PreoptError):
    """Bad command-line usage or unreadable input."""

    pass


class DslSyntaxError(CliError):
    """Signature or diagram text that does not parse; carries (line, column)."""

    def __init__(self, message: str, span: Optional[Tuple[int, int]] = None):
        super().__init__(message, span=span)

    @property
    def kind(self) -> str:
        return "SyntaxError"
