from .suite_result import SuiteResult

__all__ = ["SuiteResult"]
