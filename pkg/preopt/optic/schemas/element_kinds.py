from enum import Enum


class FillOrder(str, Enum):
    """Sequencing of the two side-by-side holes of a horizontal element."""

    AB = "AB"
    BA = "BA"


class CentralityFlag(str, Enum):
    """P0 when every non-hole slice is central, P1 otherwise."""

    P0 = "P0"
    P1 = "P1"
