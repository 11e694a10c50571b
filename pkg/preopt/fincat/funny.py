"""
Morphisms of the funny tensor C [] D as reduced alternating words.

A letter ("L", f) moves the first component along f with the second held
still, ("R", g) the second. Reduction deletes identity letters and merges
adjacent letters on the same side; nothing interchanges across sides.
"""

import logging
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict

from ..constants import FunnySides
from ..diagram.exceptions import TypeMismatchError
from .category import Arrow, FinCat, Obj

logger = logging.getLogger(__name__)

Letter = Tuple[str, Arrow]


class FunnyWord(BaseModel):
    model_config = ConfigDict(frozen=True)

    dom: Tuple[Obj, Obj]
    cod: Tuple[Obj, Obj]
    letters: Tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)


class FunnyTensor(BaseModel):
    """A lazy view of C [] D: words are built and reduced on demand."""

    model_config = ConfigDict(frozen=True)

    left: FinCat
    right: FinCat

    def side(self, name: str) -> FinCat:
        return self.left if name == FunnySides.LEFT else self.right

    def typecheck(self, dom: Tuple[Obj, Obj], letters) -> Tuple[Obj, Obj]:
        """
        Raises:
            TypeMismatchError: a letter does not start where the previous ends
        """
        current = list(dom)
        for index, (name, f) in enumerate(letters):
            if name not in FunnySides.ALL:
                raise TypeMismatchError(f"Unknown side {name!r}", index=index)
            slot = 0 if name == FunnySides.LEFT else 1
            cat = self.side(name)
            if f not in cat.arrows or cat.dom(f) != current[slot]:
                raise TypeMismatchError(
                    f"Letter {index} ({name}, {f!r}) does not start at {current[slot]!r}",
                    index=index,
                )
            current[slot] = cat.cod(f)
        return current[0], current[1]

    def _push(self, stack: List[Letter], letter: Letter) -> None:
        name, f = letter
        cat = self.side(name)
        if f == cat.id(cat.dom(f)):
            return
        if stack and stack[-1][0] == name:
            merged = cat.compose(f, stack.pop()[1])
            if merged != cat.id(cat.dom(merged)):
                stack.append((name, merged))
            return
        stack.append(letter)

    def reduce(self, letters) -> Tuple[Letter, ...]:
        """Left-to-right reduction."""
        stack: List[Letter] = []
        for letter in letters:
            self._push(stack, tuple(letter))
        return tuple(stack)

    def reduce_from_right(self, letters) -> Tuple[Letter, ...]:
        """Right-to-left reduction; agrees with `reduce` on every word."""
        stack: List[Letter] = []
        for name, f in reversed([tuple(letter) for letter in letters]):
            cat = self.side(name)
            if f == cat.id(cat.dom(f)):
                continue
            if stack and stack[-1][0] == name:
                merged = cat.compose(stack.pop()[1], f)
                if merged != cat.id(cat.dom(merged)):
                    stack.append((name, merged))
                continue
            stack.append((name, f))
        return tuple(reversed(stack))

    def word(self, dom: Tuple[Obj, Obj], letters) -> FunnyWord:
        letters = [tuple(letter) for letter in letters]
        cod = self.typecheck(dom, letters)
        return FunnyWord(dom=tuple(dom), cod=cod, letters=self.reduce(letters))

    def identity(self, dom: Tuple[Obj, Obj]) -> FunnyWord:
        return FunnyWord(dom=tuple(dom), cod=tuple(dom))

    def compose(self, w1: FunnyWord, w2: FunnyWord) -> FunnyWord:
        """w1 then w2."""
        if w1.cod != w2.dom:
            raise TypeMismatchError(f"Cannot follow a word ending at {w1.cod} by one starting at {w2.dom}")
        return FunnyWord(dom=w1.dom, cod=w2.cod, letters=self.reduce(w1.letters + w2.letters))

    def is_confluent(self, letters) -> bool:
        return self.reduce(letters) == self.reduce_from_right(letters)


def funny_tensor(left: FinCat, right: FinCat) -> FunnyTensor:
    return FunnyTensor(left=left, right=right)


def funny_word_compose(tensor: FunnyTensor, w1: FunnyWord, w2: FunnyWord) -> FunnyWord:
    return tensor.compose(w1, w2)
