"""Union-find over hashable elements, used to compute coend quotients."""

from typing import Any, Callable, Dict, Hashable, Iterable, List, Set


def canonical_key(x: Any) -> str:
    """Deterministic sort key for heterogeneous hashable elements."""
    return repr(x)


class UnionFind:
    def __init__(self, elements: Iterable[Hashable] = ()):
        self.parent: Dict[Hashable, Hashable] = {}
        self.rank: Dict[Hashable, int] = {}
        for x in elements:
            self.add(x)

    def add(self, x: Hashable) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.rank[x] = 0

    def find(self, x: Hashable) -> Hashable:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: Hashable, y: Hashable) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def __contains__(self, x: Hashable) -> bool:
        return x in self.parent

    def __len__(self) -> int:
        return len(self.parent)

    def classes(self) -> Dict[Hashable, Set[Hashable]]:
        """
        Return the partition keyed by a canonical representative.

        The representative of a class is its least member under
        `canonical_key`, independent of union order.
        """
        groups: Dict[Hashable, List[Hashable]] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        result: Dict[Hashable, Set[Hashable]] = {}
        for members in groups.values():
            rep = min(members, key=canonical_key)
            result[rep] = set(members)
        return result


def find_orbits(
    generators: Iterable[Any],
    space: Iterable[Hashable],
    action: Callable[[Any, Hashable], Hashable],
) -> Dict[Hashable, Set[Hashable]]:
    """Orbits of a (partial) action: elements joined whenever g maps x to y."""
    space = list(space)
    uf = UnionFind(space)
    for g in generators:
        for x in space:
            y = action(g, x)
            if y is not None:
                uf.union(x, y)
    return uf.classes()
