# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""
Fatgraphs as pairs of permutations on oriented edges.

tau0 rotates the oriented edges around each vertex, tau1 swaps the two ends of each edge and
tau2 = tau0 tau1 walks the boundary components.
"""

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

from loguru import logger

from coreason_hurwitz.arith.numbers import double_factorial
from coreason_hurwitz.budget import check_budget_guardrail
from coreason_hurwitz.config import settings
from coreason_hurwitz.exceptions import BudgetExceededError, DomainError
from coreason_hurwitz.oracle.permutation import Permutation, labeled_blocks, representative
from coreason_hurwitz.oracle.union_find import transitive
from coreason_hurwitz.schemas import FatgraphMode, GraphRecord

Code = tuple[int, ...]


@dataclass(frozen=True)
class Fatgraph:
    tau0: Permutation
    tau1: Permutation

    def __post_init__(self) -> None:
        if self.tau0.degree != self.tau1.degree:
            raise DomainError("tau0 and tau1 act on different sets")
        if not self.tau1.is_involution() or self.tau1.fixed_points():
            raise DomainError("tau1 must be a fixed-point-free involution")

    @property
    def size(self) -> int:
        return self.tau0.degree

    @cached_property
    def tau2(self) -> Permutation:
        return self.tau0 * self.tau1

    @property
    def vertices(self) -> list[tuple[int, ...]]:
        return self.tau0.cycles()

    @property
    def edges(self) -> list[tuple[int, ...]]:
        return self.tau1.cycles()

    @property
    def boundaries(self) -> list[tuple[int, ...]]:
        return self.tau2.cycles()

    @property
    def genus(self) -> int:
        euler = self.tau0.num_cycles() - self.size // 2 + self.tau2.num_cycles()
        if euler % 2 or euler > 2:
            raise DomainError(f"Euler characteristic {euler} does not give a genus")
        return (2 - euler) // 2

    @property
    def valences(self) -> tuple[int, ...]:
        return self.tau0.cycle_type()

    def is_connected(self) -> bool:
        return transitive((self.tau0, self.tau1), self.size)

    def is_pruned(self) -> bool:
        return not self.tau0.fixed_points()

    def matches(self, mode: FatgraphMode) -> bool:
        if mode == FatgraphMode.PRUNED:
            return self.is_pruned()
        if mode == FatgraphMode.VALENCE3PLUS:
            return min(self.valences) >= 3
        return True

    def _relabel_from(self, start: int) -> list[int]:
        order = {start: 0}
        queue = [start]
        for x in queue:
            for y in (self.tau0(x), self.tau1(x)):
                if y not in order:
                    order[y] = len(order)
                    queue.append(y)
        inverse = [0] * len(queue)
        for x, k in order.items():
            inverse[k] = x
        return inverse

    def _code(self, inverse: list[int], labels: Sequence[int]) -> Code:
        position = {x: k for k, x in enumerate(inverse)}
        return (
            tuple(position[self.tau0(x)] for x in inverse)
            + tuple(position[self.tau1(x)] for x in inverse)
            + tuple(labels[x] for x in inverse)
        )

    def canonical_form(self, labels: Sequence[int]) -> tuple[Code, int]:
        """
        Minimum breadth-first code over all starting oriented edges, and the number of starts
        reaching it, which is the order of the label-preserving automorphism group.
        """
        if not self.is_connected():
            raise DomainError("Canonical forms are defined for connected fatgraphs only")
        best: Code | None = None
        aut = 0
        for start in range(self.size):
            code = self._code(self._relabel_from(start), labels)
            if best is None or code < best:
                best, aut = code, 1
            elif code == best:
                aut += 1
        assert best is not None
        return best, aut


def boundary_labels(size: int, order: Sequence[tuple[int, ...]]) -> list[int]:
    """Label of the boundary through each oriented edge, boundaries numbered as in `order`."""
    labels = [0] * size
    for index, cycle in enumerate(order):
        for x in cycle:
            labels[x] = index
    return labels


def record_from_code(code: Code, genus: int, aut: int) -> GraphRecord:
    size = len(code) // 3
    tau0, tau1, labels = list(code[:size]), list(code[size : 2 * size]), code[2 * size :]
    boundaries: list[list[int]] = [[] for _ in range(max(labels) + 1)]
    tau2 = Permutation(tau0) * Permutation(tau1)
    for index in range(len(boundaries)):
        start = labels.index(index)
        x = start
        while True:
            boundaries[index].append(x)
            x = tau2(x)
            if x == start:
                break
    return GraphRecord(X=size, tau0=tau0, tau1=tau1, genus=genus, boundaries=boundaries, aut=aut)


def perfect_matchings(size: int) -> Iterator[Permutation]:
    """Every fixed-point-free involution of {0..size-1}; there are (size-1)!! of them."""

    def build(remaining: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
        if not remaining:
            yield []
            return
        head = remaining[0]
        for k in range(1, len(remaining)):
            partner = remaining[k]
            rest = remaining[1:k] + remaining[k + 1 :]
            for tail in build(rest):
                yield [(head, partner)] + tail

    if size % 2:
        return
    for pairs in build(tuple(range(size))):
        images = [0] * size
        for x, y in pairs:
            images[x], images[y] = y, x
        yield Permutation(images)


def check_dart_budget(size: int, estimate: int, budget: int | None, label: str) -> None:
    if size > settings.FATGRAPH_MAX_DARTS:
        logger.warning(f"Budget exceeded for {label}. Oriented edges: {size}, limit: {settings.FATGRAPH_MAX_DARTS}")
        raise BudgetExceededError(
            f"{label} needs {size} oriented edges, above the limit of {settings.FATGRAPH_MAX_DARTS}",
            estimate=estimate,
            budget=settings.FATGRAPH_MAX_DARTS,
        )
    check_budget_guardrail(estimate, budget, label)


class FatgraphCount(NamedTuple):
    count: Fraction
    graphs: list[GraphRecord]


def enumerate_fatgraphs(
    g: int, mu: Sequence[int], mode: FatgraphMode = FatgraphMode.ALL, budget: int | None = None
) -> FatgraphCount:
    """
    Sum of 1/|Aut| over connected genus-g fatgraphs with labeled boundaries of lengths mu.

    The boundary walk tau2 is fixed to the representative of mu and tau1 runs over all
    perfect matchings, so every labeled structure is seen d!/prod(mu) times less often than in
    a full count over (tau0, tau1); the weighted count is therefore hits / prod(mu).
    """
    mu = tuple(mu)
    if g < 0 or not mu or any(part < 1 for part in mu):
        raise DomainError(f"Invalid arguments g={g}, mu={mu}")
    size = sum(mu)
    if size % 2:
        return FatgraphCount(Fraction(0), [])
    label = f"enumerate_fatgraphs(g={g}, mu={mu})"
    check_dart_budget(size, double_factorial(size - 1), budget, label)
    n = len(mu)
    edges = size // 2
    vertices = 2 - 2 * g - n + edges
    if vertices < 1:
        return FatgraphCount(Fraction(0), [])
    tau2 = representative(mu)
    labels = boundary_labels(size, labeled_blocks(mu))
    hits = 0
    classes: dict[Code, int] = {}
    for tau1 in perfect_matchings(size):
        tau0 = tau2 * tau1
        if tau0.num_cycles() != vertices:
            continue
        graph = Fatgraph(tau0, tau1)
        if not graph.matches(mode) or not graph.is_connected():
            continue
        hits += 1
        code, aut = graph.canonical_form(labels)
        classes.setdefault(code, aut)
    count = Fraction(hits, math.prod(mu))
    graphs = [record_from_code(code, g, aut) for code, aut in sorted(classes.items())]
    logger.debug(f"{label} mode={mode.value}: {hits} labeled structures, {len(graphs)} classes, count {count}")
    return FatgraphCount(count, graphs)
