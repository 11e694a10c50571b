"""
Morphisms of the free effectful category as typed slice sequences.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..constants import SliceKinds
from ..signature import Signature, format_word
from ..signature.exceptions import DuplicateNameError, SignatureError
from ..signature.schemas import ObjectWord
from .exceptions import DiagramError, SignatureMismatchError, TypeMismatchError
from .schemas import Slice, TensorOrder

logger = logging.getLogger(__name__)

# (in_width, out_width, central) per generator name
WidthTable = Dict[str, Tuple[int, int, bool]]


def width_table(sig: Signature) -> WidthTable:
    table: WidthTable = {
        name: (len(gen.dom), len(gen.cod), gen.central) for name, gen in sig.generators.items()
    }
    for spec in sig.holes.values():
        hole = Slice.hole(spec.slot_label)
        table[hole.name] = (len(spec.in_type), len(spec.out_type), False)
    return table


def run_slices(sig: Signature, dom: ObjectWord, slices: Sequence[Slice]) -> List[ObjectWord]:
    """
    Typecheck a slice sequence and return every level word.

    levels[i] is the word slice i acts on; levels[-1] is the codomain.

    Raises:
        TypeMismatchError: a slice does not fit its level (carries the index)
    """
    level = tuple(dom)
    levels = [level]
    seen_holes = set()
    for index, s in enumerate(slices):
        if s.kind == SliceKinds.BARRIER:
            if not sig.barriers:
                raise TypeMismatchError(
                    "Barrier slices need a hole-extended signature", index=index
                )
            levels.append(level)
            continue
        if s.kind == SliceKinds.HOLE:
            if s.label in seen_holes:
                raise TypeMismatchError(f"Hole slot {s.label} appears twice", index=index)
            seen_holes.add(s.label)
        try:
            gen = sig.generator(s.name)
        except SignatureError as e:
            raise TypeMismatchError(str(e), index=index) from e
        end = s.offset + len(gen.dom)
        if end > len(level) or level[s.offset : end] != gen.dom:
            raise TypeMismatchError(
                f"Slice {index} ({s.name}@{s.offset}) expects {format_word(gen.dom)} "
                f"at offset {s.offset} of {format_word(level)}",
                index=index,
            )
        level = level[: s.offset] + gen.cod + level[end:]
        levels.append(level)
    return levels


class Diagram(BaseModel):
    """A morphism representative: domain word plus slices, over a signature."""

    model_config = ConfigDict(frozen=True)

    sig: Signature
    dom: ObjectWord = ()
    slices: Tuple[Slice, ...] = ()

    @model_validator(mode="after")
    def validate_typing(self):
        self.sig.check_word(self.dom, context="diagram domain")
        run_slices(self.sig, self.dom, self.slices)
        return self

    def __hash__(self) -> int:
        return hash((self.dom, self.slices))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return (
            self.dom == other.dom
            and self.slices == other.slices
            and self.sig.same_base(other.sig)
        )

    def __len__(self) -> int:
        return len(self.slices)

    @property
    def levels(self) -> List[ObjectWord]:
        return run_slices(self.sig, self.dom, self.slices)

    @property
    def cod(self) -> ObjectWord:
        return self.levels[-1]

    @property
    def hole_labels(self) -> List[int]:
        return [s.label for s in self.slices if s.kind == SliceKinds.HOLE]

    def with_slices(self, slices: Sequence[Slice]) -> "Diagram":
        """Same boundary and signature, different (already typechecked) slices."""
        return Diagram.model_construct(sig=self.sig, dom=self.dom, slices=tuple(slices))


def make_diagram(sig: Signature, dom: ObjectWord, slices: Sequence[Slice] = ()) -> Diagram:
    return Diagram(sig=sig, dom=tuple(dom), slices=tuple(slices))


def merge_signatures(a: Signature, b: Signature) -> Signature:
    if not a.same_base(b):
        raise SignatureMismatchError("Diagrams live over different signatures")
    try:
        return a.merge(b)
    except (DuplicateNameError, SignatureError) as e:
        raise SignatureMismatchError(str(e)) from e


def identity(sig: Signature, obj: ObjectWord) -> Diagram:
    return make_diagram(sig, obj)


def compose(d1: Diagram, d2: Diagram) -> Diagram:
    """
    d1 then d2.

    Raises:
        TypeMismatchError: cod(d1) != dom(d2)
        SignatureMismatchError: different signatures
    """
    sig = merge_signatures(d1.sig, d2.sig)
    if d1.cod != d2.dom:
        raise TypeMismatchError(
            f"Cannot compose: {format_word(d1.cod)} != {format_word(d2.dom)}"
        )
    return make_diagram(sig, d1.dom, d1.slices + d2.slices)


def whisker(left: ObjectWord, d: Diagram, right: ObjectWord) -> Diagram:
    """left ⋉ d ⋊ right: shift every slice by |left|."""
    d.sig.check_word(left, context="left whisker")
    d.sig.check_word(right, context="right whisker")
    shift = len(left)
    slices = [s.shifted(s.offset + shift) for s in d.slices]
    return make_diagram(d.sig, tuple(left) + d.dom + tuple(right), slices)


def tensor_seq(d1: Diagram, d2: Diagram, order: TensorOrder = TensorOrder.LEFT_FIRST) -> Diagram:
    """
    The two premonoidal interleavings of d1 ⊗ d2.

    Raises:
        SignatureMismatchError: different signatures
    """
    merge_signatures(d1.sig, d2.sig)
    if TensorOrder(order) == TensorOrder.LEFT_FIRST:
        return compose(whisker((), d1, d2.dom), whisker(d1.cod, d2, ()))
    return compose(whisker(d1.dom, d2, ()), whisker((), d1, d2.cod))


def is_central(d: Diagram) -> bool:
    """True iff every slice is a central generator (holes and barriers never are)."""
    for s in d.slices:
        if s.kind != SliceKinds.GEN or not d.sig.generator(s.name).central:
            return False
    return True


def generator_diagram(sig: Signature, name: str, left: ObjectWord = (), right: ObjectWord = ()) -> Diagram:
    """A single whiskered generator."""
    gen = sig.generator(name)
    if name not in sig.generators:
        raise DiagramError(f"'{name}' is not a user generator")
    return make_diagram(
        sig, tuple(left) + gen.dom + tuple(right), [Slice.gen(name, len(left))]
    )
