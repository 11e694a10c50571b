"""
Premonoidal signatures: atoms, typed generators with centrality marks, and
the hole/barrier extension used to encode combs.
"""

import logging
from typing import Dict, Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..constants import ReservedNames
from .exceptions import DuplicateNameError, SignatureError, UndeclaredAtomError
from .schemas import Generator, HoleSpec, ObjectWord, format_word

logger = logging.getLogger(__name__)

_RESERVED_GENERATOR_NAMES = {ReservedNames.BARRIER, "hole", "atoms", "gen", "central"}


class Signature(BaseModel):
    """
    Generating data of a free effectful category.

    User generators live in `generators`; holes added by `extend_with_holes`
    live in `holes` and are looked up through the same `generator()` call
    under their reserved names.
    """

    model_config = ConfigDict(frozen=True)

    atoms: Tuple[str, ...] = ()
    generators: Dict[str, Generator] = {}
    holes: Dict[int, HoleSpec] = {}
    barriers: bool = False

    @model_validator(mode="after")
    def validate_consistency(self):
        seen = set()
        for atom in self.atoms:
            if atom in seen:
                raise DuplicateNameError(f"Atom '{atom}' declared twice")
            if not atom or atom == ReservedNames.UNIT or "*" in atom:
                raise DuplicateNameError(f"Atom name '{atom}' is reserved")
            seen.add(atom)
        for key, gen in self.generators.items():
            if key != gen.name:
                raise SignatureError(f"Generator key '{key}' does not match name '{gen.name}'")
            if gen.name.startswith(ReservedNames.HOLE_PREFIX) or gen.name in _RESERVED_GENERATOR_NAMES:
                raise DuplicateNameError(f"Generator name '{gen.name}' is reserved")
            self.check_word(gen.dom, context=f"generator '{gen.name}'")
            self.check_word(gen.cod, context=f"generator '{gen.name}'")
        for label, spec in self.holes.items():
            if label != spec.slot_label:
                raise SignatureError(f"Hole key {label} does not match slot {spec.slot_label}")
            self.check_word(spec.in_type, context=f"hole {label}")
            self.check_word(spec.out_type, context=f"hole {label}")
        return self

    def __hash__(self) -> int:
        return hash((self.atoms, tuple(sorted(self.generators)), tuple(sorted(self.holes))))

    def check_word(self, w: ObjectWord, context: str = "object word") -> None:
        for atom in w:
            if atom not in self.atoms:
                raise UndeclaredAtomError(
                    f"Undeclared atom '{atom}' in {context} ({format_word(w)})"
                )

    def generator(self, name: str) -> Generator:
        """Look up a user generator or a hole generator by name."""
        if name in self.generators:
            return self.generators[name]
        for spec in self.holes.values():
            if ReservedNames.hole_name(spec.slot_label) == name:
                return hole_generator(spec)
        raise SignatureError(f"Unknown generator '{name}'")

    def hole(self, label: int) -> HoleSpec:
        if label not in self.holes:
            raise SignatureError(f"Unknown hole slot {label}")
        return self.holes[label]

    def same_base(self, other: "Signature") -> bool:
        """True when both signatures share atoms and user generators."""
        return set(self.atoms) == set(other.atoms) and self.generators == other.generators

    def merge(self, other: "Signature") -> "Signature":
        """
        Union of hole extensions over a common base.

        Raises:
            SignatureError: if the bases differ
            DuplicateNameError: if a slot label is used with two different types
        """
        if not self.same_base(other):
            raise SignatureError("Cannot merge signatures with different generators")
        holes = dict(self.holes)
        for label, spec in other.holes.items():
            if label in holes and holes[label] != spec:
                raise DuplicateNameError(f"Hole slot {label} declared with two types")
            holes[label] = spec
        return self.model_copy(
            update={"holes": holes, "barriers": self.barriers or other.barriers}
        )

    def base(self) -> "Signature":
        """The signature without holes and barriers."""
        return self.model_copy(update={"holes": {}, "barriers": False})


def hole_generator(spec: HoleSpec) -> Generator:
    """The fresh non-central generator standing for a hole."""
    return Generator(
        name=ReservedNames.hole_name(spec.slot_label),
        dom=spec.in_type,
        cod=spec.out_type,
        central=False,
    )


def declare_signature(
    atoms: Iterable[str] = (), generators: Iterable[Generator] = ()
) -> Signature:
    """
    Build and validate a signature.

    Raises:
        DuplicateNameError: two atoms or two generators share a name
        UndeclaredAtomError: a generator type mentions an unknown atom
    """
    gens: Dict[str, Generator] = {}
    for gen in generators:
        if gen.name in gens:
            raise DuplicateNameError(f"Generator '{gen.name}' declared twice")
        gens[gen.name] = gen
    sig = Signature(atoms=tuple(atoms), generators=gens)
    logger.debug(f"Declared signature with {len(sig.atoms)} atoms, {len(gens)} generators")
    return sig


def extend_with_holes(sig: Signature, specs: Iterable[HoleSpec] = ()) -> Signature:
    """
    Add one fresh non-central generator per hole and enable barriers.

    Raises:
        UndeclaredAtomError: a hole type mentions an unknown atom
        DuplicateNameError: a slot label is reused with a different type
    """
    holes: Dict[int, HoleSpec] = dict(sig.holes)
    added: List[int] = []
    for spec in specs:
        sig.check_word(spec.in_type, context=f"hole {spec.slot_label}")
        sig.check_word(spec.out_type, context=f"hole {spec.slot_label}")
        existing = holes.get(spec.slot_label)
        if existing is not None and existing != spec:
            raise DuplicateNameError(f"Hole slot {spec.slot_label} declared with two types")
        holes[spec.slot_label] = spec
        added.append(spec.slot_label)
    logger.debug(f"Extended signature with holes {added}")
    return sig.model_copy(update={"holes": holes, "barriers": True})
