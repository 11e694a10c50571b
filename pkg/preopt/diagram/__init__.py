"""
Diagrams over a signature and the central-interchange congruence.
"""

from .diagram import (
    Diagram,
    make_diagram,
    identity,
    compose,
    whisker,
    tensor_seq,
    is_central,
    generator_diagram,
    merge_signatures,
    run_slices,
    width_table,
)
from .congruence import (
    pair_moves,
    disjoint_moves,
    swap_moves,
    swap_adjacent,
    enumerate_class,
    greedy_normal_form,
    greedy_is_exact,
    exact_normal_form,
    normal_form,
    equal,
    sequence_key,
)
from .codec import diagram_to_dict, diagram_from_dict, slice_to_dict, slice_from_dict
from .literal import format_diagram, format_slice
from .schemas import Slice, TensorOrder
from .exceptions import (
    DiagramError,
    TypeMismatchError,
    SignatureMismatchError,
    NotSwappableError,
    ClassBudgetExceededError,
)

__all__ = [
    "Diagram",
    "make_diagram",
    "identity",
    "compose",
    "whisker",
    "tensor_seq",
    "is_central",
    "generator_diagram",
    "merge_signatures",
    "run_slices",
    "width_table",
    "pair_moves",
    "disjoint_moves",
    "swap_moves",
    "swap_adjacent",
    "enumerate_class",
    "greedy_normal_form",
    "greedy_is_exact",
    "exact_normal_form",
    "normal_form",
    "equal",
    "sequence_key",
    "diagram_to_dict",
    "diagram_from_dict",
    "slice_to_dict",
    "slice_from_dict",
    "format_diagram",
    "format_slice",
    "Slice",
    "TensorOrder",
    "DiagramError",
    "TypeMismatchError",
    "SignatureMismatchError",
    "NotSwappableError",
    "ClassBudgetExceededError",
]
