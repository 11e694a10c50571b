"""
Premonoidal signatures and their hole extensions.
"""

from .signature import (
    Signature,
    declare_signature,
    extend_with_holes,
    hole_generator,
)
from .schemas import Generator, HoleSpec, ObjectWord, UNIT, parse_word, format_word
from .examples import running_signature, empty_signature
from .exceptions import SignatureError, DuplicateNameError, UndeclaredAtomError

__all__ = [
    "Signature",
    "declare_signature",
    "extend_with_holes",
    "hole_generator",
    "Generator",
    "HoleSpec",
    "ObjectWord",
    "UNIT",
    "parse_word",
    "format_word",
    "running_signature",
    "empty_signature",
    "SignatureError",
    "DuplicateNameError",
    "UndeclaredAtomError",
]
