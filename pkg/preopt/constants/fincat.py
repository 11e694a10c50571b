"""
Names used by the finite-category layer and the `fincat` command.
"""


class FunnySides:
    """Letter sides of a funny-tensor word."""

    LEFT = "L"
    RIGHT = "R"

    ALL = [LEFT, RIGHT]


class ExampleNames:
    """Named effectful categories."""

    WRITER_M3 = "writer:M3"
    WRITER_Z2 = "writer:Z2"
    WALKING_ARROW = "walking-arrow"
    TRIVIAL = "trivial"
    DISCRETE_PREFIX = "discrete:"
    WRITER_PREFIX = "writer:"

    ALL_NAMED = [WRITER_M3, WRITER_Z2, WALKING_ARROW, TRIVIAL]


class Checks:
    """Checker names accepted by `fincat --verify`."""

    CATEGORY = "category"
    EFFECTFUL = "effectful"
    INTERCHANGE = "interchange"
    PROMONAD = "promonad"
    KLEISLI = "kleisli"
    TAMBARA = "tambara"
    PROSTRENGTH = "prostrength"
    PROMONOIDAL = "promonoidal"
    COEND = "coend"
    LAN = "lan"
    DAY = "day"
    OPTIC = "optic"
    HORIZONTAL = "horizontal"
    PROACTION = "proaction"
    CLOSURE = "closure"
    ALL = "all"

    ALL_CHECKS = [
        CATEGORY,
        EFFECTFUL,
        INTERCHANGE,
        PROMONAD,
        KLEISLI,
        TAMBARA,
        PROSTRENGTH,
        PROMONOIDAL,
        COEND,
        LAN,
        DAY,
        OPTIC,
        HORIZONTAL,
        PROACTION,
        CLOSURE,
    ]
