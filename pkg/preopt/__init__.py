"""
preopt

A symbolic engine for free premonoidal (effectful) categories: equality
under the central-interchange congruence, optics and combs as diagrams with
holes, and coend/promonad/Day checks on finite categories.
"""

from ._base.exceptions import BudgetExceededError, PreoptError
from .config import Settings, get_settings
from .diagram import Diagram, equal, normal_form
from .optic import Comb, Optic, optic_equal, substitute
from .signature import Signature, declare_signature, running_signature

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "PreoptError",
    "Settings",
    "get_settings",
    "Diagram",
    "equal",
    "normal_form",
    "Comb",
    "Optic",
    "optic_equal",
    "substitute",
    "Signature",
    "declare_signature",
    "running_signature",
]
