from .obj_pair import ObjPair
from .element_kinds import FillOrder, CentralityFlag
from .optic_parts import OpticParts

__all__ = ["ObjPair", "FillOrder", "CentralityFlag", "OpticParts"]
