from .enumeration import enumerate_families, function_space
from .union_find import UnionFind, canonical_key, find_orbits

__all__ = [
    "enumerate_families",
    "function_space",
    "UnionFind",
    "canonical_key",
    "find_orbits",
]
