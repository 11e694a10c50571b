from enum import Enum


class TensorOrder(str, Enum):
    """Which side of a whiskered pair runs first."""

    LEFT_FIRST = "LeftFirst"
    RIGHT_FIRST = "RightFirst"
