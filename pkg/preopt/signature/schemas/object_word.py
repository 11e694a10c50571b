"""
Object words: tensors of atoms, strictified. The empty word is the unit I.
"""

from typing import Iterable, Tuple

from ...constants import ReservedNames

ObjectWord = Tuple[str, ...]

UNIT: ObjectWord = ()


def word(atoms: Iterable[str] = ()) -> ObjectWord:
    return tuple(atoms)


def parse_word(text: str) -> ObjectWord:
    """Parse `I`, `A`, `A*B*A` (whitespace tolerated)."""
    text = text.strip()
    if text in ("", ReservedNames.UNIT):
        return UNIT
    return tuple(part.strip() for part in text.split("*"))


def format_word(w: ObjectWord) -> str:
    return "*".join(w) if w else ReservedNames.UNIT
