"""
Parsers for the signature and diagram DSLs.

    atoms A B ;
    gen s : A -> A central ;
    gen h : A -> A*A central ;

    A*B | s@0, hole(B,B,0)@1, barrier

Every error carries the (line, column) of the offending token.
"""

import logging
from typing import Dict, List, Tuple, Union

from lark import Lark, Token, Tree
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

from ..constants import ReservedNames
from ..diagram import Diagram, TypeMismatchError, make_diagram
from ..diagram.schemas import Slice
from ..optic import Comb, Optic, as_comb
from ..signature import (
    DuplicateNameError,
    Generator,
    HoleSpec,
    Signature,
    UndeclaredAtomError,
    declare_signature,
    extend_with_holes,
    format_word,
)
from ..signature.schemas import ObjectWord
from .exceptions import DslSyntaxError

logger = logging.getLogger(__name__)

Span = Tuple[int, int]

_COMMON = r"""
    word: NAME ("*" NAME)*
    NAME: /[A-Za-z_][A-Za-z0-9_']*/
    COMMENT: /#[^\n]*/
    %import common.INT
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

SIGNATURE_GRAMMAR = (
    r"""
    start: decl*
    decl: "atoms" NAME* ";"                           -> atoms_decl
        | "gen" NAME ":" word "->" word CENTRAL? ";"  -> gen_decl
    CENTRAL: "central"
"""
    + _COMMON
)

DIAGRAM_GRAMMAR = (
    r"""
    start: word "|" (slice ("," slice)*)?
    slice: NAME "@" INT                                  -> gen_slice
         | HOLE "(" word "," word "," INT ")" "@" INT    -> hole_slice
         | BARRIER                                       -> barrier_slice
    HOLE: "hole"
    BARRIER: "barrier"
"""
    + _COMMON
)

_signature_parser = Lark(SIGNATURE_GRAMMAR, parser="lalr", propagate_positions=True)
_diagram_parser = Lark(DIAGRAM_GRAMMAR, parser="lalr", propagate_positions=True)


def _parse(parser: Lark, text: str) -> Tree:
    try:
        return parser.parse(text)
    except UnexpectedToken as e:
        if e.token.type == "$END":
            message = "Unexpected end of input"
        else:
            message = f"Unexpected token {str(e.token)!r}"
        raise DslSyntaxError(message, span=(e.line, e.column)) from e
    except UnexpectedCharacters as e:
        raise DslSyntaxError(f"Unexpected character {e.char!r}", span=(e.line, e.column)) from e
    except UnexpectedInput as e:
        raise DslSyntaxError("Malformed input", span=(e.line, e.column)) from e


def _span(node: Union[Token, Tree]) -> Span:
    if isinstance(node, Token):
        return (node.line, node.column)
    return (node.meta.line, node.meta.column)


def _word(node: Tree) -> ObjectWord:
    # `I` is the unit and contributes no atoms
    return tuple(str(tok) for tok in node.children if str(tok) != ReservedNames.UNIT)


def _checked_word(node: Tree, atoms) -> ObjectWord:
    w = _word(node)
    for atom in w:
        if atom not in atoms:
            raise UndeclaredAtomError(
                f"Undeclared atom '{atom}' in {format_word(w)}", span=_span(node)
            )
    return w


def parse_signature(text: str) -> Signature:
    """
    Raises:
        DslSyntaxError: the text does not parse
        DuplicateNameError: an atom or generator is declared twice
        UndeclaredAtomError: a generator type mentions an unknown atom
    """
    tree = _parse(_signature_parser, text)
    atoms: Dict[str, Span] = {}
    declared: Dict[str, Span] = {}
    pending: List[Tuple[Token, Tree, Tree, bool]] = []
    for decl in tree.children:
        if decl.data == "atoms_decl":
            for tok in decl.children:
                if str(tok) in atoms:
                    raise DuplicateNameError(f"Atom '{tok}' declared twice", span=_span(tok))
                atoms[str(tok)] = _span(tok)
            continue
        name, dom, cod, *flag = decl.children
        if str(name) in declared:
            raise DuplicateNameError(f"Generator '{name}' declared twice", span=_span(name))
        declared[str(name)] = _span(name)
        pending.append((name, dom, cod, bool(flag)))

    generators = [
        Generator(
            name=str(name),
            dom=_checked_word(dom, atoms),
            cod=_checked_word(cod, atoms),
            central=central,
        )
        for name, dom, cod, central in pending
    ]
    sig = declare_signature(list(atoms), generators)
    logger.debug(f"Parsed signature with {len(atoms)} atoms and {len(generators)} generators")
    return sig


def parse_diagram(text: str, sig: Signature) -> Union[Diagram, Comb]:
    """
    Parse and typecheck a diagram literal. Literals with holes or barriers
    become combs (an Optic when there is exactly one hole).

    Raises:
        DslSyntaxError: the text does not parse
        UndeclaredAtomError: a word mentions an unknown atom
        TypeMismatchError: a slice does not fit its level (span of that slice)
        DuplicateNameError: a hole slot is reused with another type
    """
    tree = _parse(_diagram_parser, text)
    word_node, *slice_nodes = tree.children
    dom = _checked_word(word_node, sig.atoms)

    slices: List[Slice] = []
    spans: List[Span] = []
    holes: Dict[int, HoleSpec] = {}
    barrier = False
    for node in slice_nodes:
        spans.append(_span(node))
        if node.data == "gen_slice":
            name, offset = node.children
            slices.append(Slice.gen(str(name), int(offset)))
        elif node.data == "hole_slice":
            _, in_node, out_node, label, offset = node.children
            spec = HoleSpec(
                in_type=_checked_word(in_node, sig.atoms),
                out_type=_checked_word(out_node, sig.atoms),
                slot_label=int(label),
            )
            if holes.get(spec.slot_label, spec) != spec:
                raise DuplicateNameError(
                    f"Hole slot {spec.slot_label} used with two types", span=_span(node)
                )
            holes[spec.slot_label] = spec
            slices.append(Slice.hole(spec.slot_label, int(offset)))
        else:
            barrier = True
            slices.append(Slice.barrier())

    target = extend_with_holes(sig, holes.values()) if holes or barrier else sig
    try:
        d = make_diagram(target, dom, slices)
    except TypeMismatchError as e:
        span = spans[e.index] if e.index is not None and e.index < len(spans) else None
        raise TypeMismatchError(str(e), index=e.index, span=span) from e
    if target is sig:
        return d
    comb = as_comb(d)
    if len(comb.holes) == 1:
        return Optic(under=comb.under, holes=comb.holes)
    return comb


def format_signature(sig: Signature) -> str:
    lines = []
    if sig.atoms:
        lines.append(f"atoms {' '.join(sig.atoms)} ;")
    for gen in sig.generators.values():
        flag = " central" if gen.central else ""
        lines.append(f"gen {gen.name} : {format_word(gen.dom)} -> {format_word(gen.cod)}{flag} ;")
    return "\n".join(lines) + "\n"
