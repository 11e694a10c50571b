"""
Seeded random well-typed diagrams, optics and combs.

Diagrams are grown by rejection sampling: each step draws a generator and an
offset uniformly and keeps the pair only if it typechecks at the current
level. Every draw goes through one `numpy.random.Generator`, so a seed fixes
the whole sequence of instances.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..diagram import Diagram, enumerate_class, generator_diagram, identity, make_diagram, sequence_key
from ..diagram.schemas import Slice
from ..optic import FillOrder, HorizElement, Optic, horiz_element, optic_new
from ..signature import HoleSpec, Signature
from ..signature.schemas import ObjectWord

logger = logging.getLogger(__name__)

MAX_SLICES = 8
MAX_WIDTH = 5
ATTEMPTS = 20


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def pick(rng: np.random.Generator, items: Sequence):
    return items[int(rng.integers(len(items)))]


def random_word(rng: np.random.Generator, sig: Signature, min_len: int = 1, max_len: int = 3) -> ObjectWord:
    if not sig.atoms:
        return ()
    size = int(rng.integers(min_len, max_len + 1))
    return tuple(pick(rng, sig.atoms) for _ in range(size))


def random_diagram(
    rng: np.random.Generator,
    sig: Signature,
    dom: ObjectWord,
    max_slices: int = MAX_SLICES,
    length: Optional[int] = None,
    max_width: int = MAX_WIDTH,
) -> Diagram:
    """
    A random diagram from `dom` with at most `max_slices` slices.

    A step whose draws all fail to typecheck is dropped, so the result may be
    shorter than requested.
    """
    names = sorted(sig.generators)
    target = int(rng.integers(0, max_slices + 1)) if length is None else length
    level = tuple(dom)
    slices: List[Slice] = []
    for _ in range(target if names else 0):
        for _ in range(ATTEMPTS):
            gen = sig.generators[pick(rng, names)]
            offset = int(rng.integers(0, len(level) + 1))
            end = offset + len(gen.dom)
            if end > len(level) or level[offset:end] != gen.dom:
                continue
            nxt = level[:offset] + gen.cod + level[end:]
            if len(nxt) > max(max_width, len(level)):
                continue
            slices.append(Slice.gen(gen.name, offset))
            level = nxt
            break
    return make_diagram(sig, dom, slices)


def random_class_member(rng: np.random.Generator, d: Diagram, budget: Optional[int] = None) -> Diagram:
    members = sorted(enumerate_class(d, budget), key=lambda m: sequence_key(m.slices))
    return pick(rng, members)


def _segment(rng: np.random.Generator, level: ObjectWord) -> Tuple[int, int]:
    """(offset, width) of a nonempty segment of the level, or (0, 0) on the unit."""
    if not level:
        return 0, 0
    width = int(rng.integers(1, min(2, len(level)) + 1))
    return int(rng.integers(0, len(level) - width + 1)), width


def random_optic_chain(
    rng: np.random.Generator,
    sig: Signature,
    dom: ObjectWord,
    depth: int,
    max_slices: int = 3,
) -> List[Optic]:
    """
    `depth` optics o1, o2, ... where each one fits the hole of the previous.

    All holes use slot 0.
    """
    f = random_diagram(rng, sig, dom, max_slices)
    x_width, width = _segment(rng, f.cod)
    inner_type = f.cod[x_width : x_width + width]
    inner: List[Optic] = []
    if depth > 1:
        inner = random_optic_chain(rng, sig, inner_type, depth - 1, max_slices)
        out_type = inner[0].cod
    elif rng.integers(2):
        out_type = inner_type
    else:
        out_type = random_word(rng, sig, 1, 2)
    hole = HoleSpec(in_type=inner_type, out_type=out_type, slot_label=0)
    level = f.cod[:x_width] + out_type + f.cod[x_width + width :]
    g = random_diagram(rng, sig, level, max_slices)
    return [optic_new(f, x_width, hole, g)] + inner


def random_optic(
    rng: np.random.Generator,
    sig: Signature,
    dom: Optional[ObjectWord] = None,
    max_slices: int = 3,
) -> Optic:
    if dom is None:
        dom = random_word(rng, sig, 1, 3)
    return random_optic_chain(rng, sig, dom, 1, max_slices)[0]


def with_diagram(o: Optic, under: Diagram) -> Optic:
    """The optic whose underlying diagram is replaced by a congruent or mutated one."""
    return Optic(under=under, holes=o.holes)


def _sibling(sig: Signature, name: str) -> Optional[str]:
    gen = sig.generators[name]
    for other in sorted(sig.generators):
        cand = sig.generators[other]
        if cand.dom == gen.dom and cand.cod == gen.cod and cand.central != gen.central:
            return other
    return None


def mutate_centrality(rng: np.random.Generator, d: Diagram) -> Optional[Diagram]:
    """
    Replace one generator slice by a same-typed generator of opposite
    centrality. None when no slice has such a sibling.
    """
    candidates = [
        (i, _sibling(d.sig, s.name))
        for i, s in enumerate(d.slices)
        if s.name in d.sig.generators
    ]
    candidates = [(i, name) for i, name in candidates if name is not None]
    if not candidates:
        return None
    i, name = pick(rng, candidates)
    slices = list(d.slices)
    slices[i] = Slice.gen(name, slices[i].offset)
    return make_diagram(d.sig, d.dom, slices)


def _unary_generators(sig: Signature, atom: str) -> List[str]:
    return [name for name in sorted(sig.generators) if sig.generators[name].dom == (atom,)]


def random_horizontal(
    rng: np.random.Generator, sig: Signature, max_slices: int = 3
) -> Optional[Tuple[HorizElement, Dict[int, Diagram]]]:
    """
    A horizontal element with single-atom holes in slots 0 and 1, plus one
    single-generator fill per slot. None when the drawn atoms have no
    generators.
    """
    dom = random_word(rng, sig, 2, 4)
    f = random_diagram(rng, sig, dom, max_slices)
    level = f.cod
    if len(level) < 2:
        return None
    i = int(rng.integers(0, len(level) - 1))
    j = int(rng.integers(i + 1, len(level)))
    names_a = _unary_generators(sig, level[i])
    names_b = _unary_generators(sig, level[j])
    if not names_a or not names_b:
        return None
    fill_a = generator_diagram(sig.base(), pick(rng, names_a))
    fill_b = generator_diagram(sig.base(), pick(rng, names_b))
    hole_a = HoleSpec(in_type=fill_a.dom, out_type=fill_a.cod, slot_label=0)
    hole_b = HoleSpec(in_type=fill_b.dom, out_type=fill_b.cod, slot_label=1)
    after = level[:i] + fill_a.cod + level[i + 1 : j] + fill_b.cod + level[j + 1 :]
    g = random_diagram(rng, sig, after, max_slices)
    comb = horiz_element(f, i, hole_a, j - i - 1, hole_b, g, order=FillOrder.AB)
    logger.debug(f"Drew horizontal element with fills {fill_a.slices[0].name}, {fill_b.slices[0].name}")
    return comb, {0: fill_a, 1: fill_b}


def identity_on(sig: Signature, w: ObjectWord) -> Diagram:
    return identity(sig.base(), w)
