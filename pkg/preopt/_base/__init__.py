"""
Base exceptions shared by every preopt subpackage.
"""

from .exceptions import PreoptError, BudgetExceededError

__all__ = ["PreoptError", "BudgetExceededError"]
