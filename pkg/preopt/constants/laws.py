"""
Names of the randomized law suites run by `preopt laws`.
"""


class Suites:
    """Suite names accepted by `laws --suite`."""

    INTERCHANGE = "interchange"
    NORMAL_FORM = "normal-form"
    OPTIC = "optic"
    OPTIC_LAWS = "optic-laws"
    HORIZONTAL = "horizontal"
    UNIT = "unit"
    FINCAT = "fincat"

    ALL_SUITES = [INTERCHANGE, NORMAL_FORM, OPTIC, OPTIC_LAWS, HORIZONTAL, UNIT, FINCAT]
