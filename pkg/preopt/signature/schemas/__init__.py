from .object_word import ObjectWord, UNIT, word, parse_word, format_word
from .generator import Generator
from .hole_spec import HoleSpec

__all__ = [
    "ObjectWord",
    "UNIT",
    "word",
    "parse_word",
    "format_word",
    "Generator",
    "HoleSpec",
]
