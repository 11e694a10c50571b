from .slice import Slice
from .tensor_order import TensorOrder

__all__ = ["Slice", "TensorOrder"]
