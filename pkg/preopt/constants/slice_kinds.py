"""
Slice kind constants for diagrams.
"""


class SliceKinds:
    """Slice kind constants."""

    GEN = "gen"
    HOLE = "hole"
    BARRIER = "barrier"

    # Normal forms order slices Gen < Hole < Barrier at equal offsets
    RANK = {GEN: 0, HOLE: 1, BARRIER: 2}

    ALL_KINDS = [GEN, HOLE, BARRIER]


class ReservedNames:
    """Names user signatures may not declare."""

    HOLE_PREFIX = "HOLE"
    BARRIER = "barrier"
    UNIT = "I"

    @classmethod
    def hole_name(cls, label: int) -> str:
        return f"{cls.HOLE_PREFIX}<{label}>"


class SwapCases:
    """Which side of the first slice the second one lies on before a swap."""

    # second slice entirely left of the first slice's output
    LEFT = "left"
    # second slice entirely right of the first slice's output
    RIGHT = "right"

    ALL_CASES = [LEFT, RIGHT]
