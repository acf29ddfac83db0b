# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""Permutations of {0, ..., d-1} stored as image tuples."""

from collections import deque
from collections.abc import Iterable, Sequence

from coreason_hurwitz.exceptions import DomainError


class Permutation:
    """
    A bijection of {0, ..., degree-1}. Composition follows maps: (p * q)(x) = p(q(x)).
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]) -> None:
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise DomainError(f"Image table {images} is not a bijection")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @classmethod
    def transposition(cls, i: int, j: int, degree: int) -> "Permutation":
        return cls.from_cycles([(i, j)], degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise DomainError("Cannot compose permutations of different degrees")
        return Permutation(tuple(self.images[y] for y in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(inv)

    def conjugate(self, by: "Permutation") -> "Permutation":
        """by * self * by^-1."""
        return by * self * by.inverse()

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles including fixed points, each starting at its least element, ordered by that element."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def num_cycles(self) -> int:
        return len(self.cycles())

    def is_involution(self) -> bool:
        return all(self.images[y] == x for x, y in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [x for x, y in enumerate(self.images) if x == y]

    def support(self) -> set[int]:
        return {x for x, y in enumerate(self.images) if x != y}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return f"Permutation(id, degree={self.degree})"
        return f"Permutation({''.join('(' + ' '.join(map(str, c)) + ')' for c in moved)}, degree={self.degree})"


def labeled_blocks(mu: Sequence[int]) -> list[tuple[int, ...]]:
    """Consecutive blocks of {0..|mu|-1}; block i has size mu[i]."""
    blocks = []
    start = 0
    for part in mu:
        blocks.append(tuple(range(start, start + part)))
        start += part
    return blocks


def representative(mu: Sequence[int]) -> Permutation:
    """The fixed T of cycle type mu whose i-th cycle is the i-th consecutive block."""
    if any(part < 1 for part in mu):
        raise DomainError(f"Cycle lengths must be positive, got {tuple(mu)}")
    return Permutation.from_cycles(labeled_blocks(mu), sum(mu))


def orbits(generators: Iterable[Permutation], degree: int) -> list[set[int]]:
    """Orbits of the generated group, by breadth-first search."""
    gens = list(generators)
    seen: set[int] = set()
    out = []
    for start in range(degree):
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = g(x)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        seen |= orbit
        out.append(orbit)
    return out
