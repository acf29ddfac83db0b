# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from collections.abc import Iterable, Iterator

from coreason_hurwitz.oracle.permutation import Permutation


class UnionFind:
    """Disjoint sets over {0, ..., size-1} with union by rank and path compression."""

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))
        self.rank = [0] * size
        self.components = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.components -= 1
        return True

    def groups(self) -> list[set[int]]:
        out: dict[int, set[int]] = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), set()).add(x)
        return list(out.values())

    def __len__(self) -> int:
        return self.components

    def __iter__(self) -> Iterator[set[int]]:
        return iter(self.groups())


def find_orbits(generators: Iterable[Permutation], degree: int) -> list[set[int]]:
    """Orbits of the group generated by the permutations, via union-find."""
    uf = UnionFind(degree)
    for g in generators:
        for x in range(degree):
            uf.union(x, g(x))
    return uf.groups()


def transitive(generators: Iterable[Permutation], degree: int) -> bool:
    uf = UnionFind(degree)
    for g in generators:
        for x in range(degree):
            uf.union(x, g(x))
    return degree == 0 or len(uf) == 1
