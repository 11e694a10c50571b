"""
Custom exceptions for signatures.
"""

from .._base.exceptions import PreoptError


class SignatureError(PreoptError):
    pass


class DuplicateNameError(SignatureError):
    """Two atoms or two generators share a name, or a reserved name is used."""

    pass


class UndeclaredAtomError(SignatureError):
    """An object word mentions an atom the signature does not declare."""

    pass
