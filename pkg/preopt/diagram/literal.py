"""
Printer for the diagram literal syntax:

    A*B | s@0, hole(B,B,0)@1, barrier

The parser lives in `preopt.cli.parser`; both sides must stay inverse.
"""

from ..constants import SliceKinds
from ..signature import Signature, format_word
from .diagram import Diagram
from .schemas import Slice


def format_slice(s: Slice, sig: Signature) -> str:
    if s.kind == SliceKinds.BARRIER:
        return SliceKinds.BARRIER
    if s.kind == SliceKinds.HOLE:
        spec = sig.hole(s.label)
        return f"hole({format_word(spec.in_type)},{format_word(spec.out_type)},{s.label})@{s.offset}"
    return f"{s.name}@{s.offset}"


def format_diagram(d: Diagram) -> str:
    body = ", ".join(format_slice(s, d.sig) for s in d.slices)
    head = format_word(d.dom)
    return f"{head} | {body}" if body else f"{head} |"
