"""
Named example signatures.
"""

from .schemas import Generator
from .signature import Signature, declare_signature


def running_signature() -> Signature:
    """
    The running test signature: atoms A, B; central s, c, h; non-central f, g.
    """
    return declare_signature(
        atoms=["A", "B"],
        generators=[
            Generator(name="s", dom=("A",), cod=("A",), central=True),
            Generator(name="f", dom=("A",), cod=("A",), central=False),
            Generator(name="c", dom=("B",), cod=("B",), central=True),
            Generator(name="g", dom=("B",), cod=("B",), central=False),
            Generator(name="h", dom=("A",), cod=("A", "A"), central=True),
        ],
    )


def empty_signature() -> Signature:
    return declare_signature(atoms=[], generators=[])
