from .check_result import CheckResult
from .coend_result import CoendResult, V2CoendResult

__all__ = ["CheckResult", "CoendResult", "V2CoendResult"]
