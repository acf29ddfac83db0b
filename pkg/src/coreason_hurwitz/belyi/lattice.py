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
Lattice points in the cells of the ribbon-graph decomposition:

    N_{g,n}(mu) = sum over valence >= 3 fatgraphs G of #{x in Z_+^E(G) : A_G x = mu} / |Aut G|.
"""

import itertools
import math
import random
import threading
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from loguru import logger

from coreason_hurwitz.arith.interpolation import interpolate, lower_index_set
from coreason_hurwitz.arith.numbers import double_factorial
from coreason_hurwitz.arith.polynomial import MultiPolynomial, QuasiPolynomial
from coreason_hurwitz.belyi.fatgraph import Code, Fatgraph, boundary_labels, check_dart_budget, perfect_matchings
from coreason_hurwitz.config import settings
from coreason_hurwitz.exceptions import DomainError, InterpolationError
from coreason_hurwitz.oracle.permutation import Permutation

Point = tuple[int, ...]


@dataclass(frozen=True)
class CellPolytope:
    """A valence >= 3 fatgraph with labeled boundaries and its incidence matrix."""

    graph: Fatgraph
    labels: tuple[int, ...]
    aut: int
    n: int

    @cached_property
    def incidence(self) -> list[list[int]]:
        """A[i][e]: how many sides of edge e lie on boundary i; every column sums to 2."""
        edges = self.graph.edges
        matrix = [[0] * len(edges) for _ in range(self.n)]
        for e, edge in enumerate(edges):
            for x in edge:
                matrix[self.labels[x]][e] += 1
        return matrix

    def count(self, mu: Sequence[int]) -> int:
        """Positive integer edge lengths giving boundary lengths mu."""
        if len(mu) != self.n:
            raise DomainError(f"Expected {self.n} boundary lengths, got {len(mu)}")
        columns = [tuple(row[e] for row in self.incidence) for e in range(len(self.graph.edges))]
        return _solutions(columns, list(mu))


def _solutions(columns: list[tuple[int, ...]], remaining: list[int]) -> int:
    if not columns:
        return 1 if not any(remaining) else 0
    column, rest = columns[0], columns[1:]
    # each later edge still needs length >= 1
    reserve = [sum(c[i] for c in rest) for i in range(len(remaining))]
    top = min((remaining[i] - reserve[i]) // k for i, k in enumerate(column) if k)
    total = 0
    for x in range(1, top + 1):
        for i, k in enumerate(column):
            remaining[i] -= k * x
        total += _solutions(rest, remaining)
        for i, k in enumerate(column):
            remaining[i] += k * x
    return total


def _partitions(total: int, parts: int, smallest: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of `parts` integers >= smallest summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total - smallest * (parts - 1), smallest - 1, -1):
        for tail in _partitions(total - first, parts - 1, smallest):
            if not tail or tail[0] <= first:
                yield (first,) + tail


def _stable(g: int, n: int) -> None:
    if g < 0 or n < 1 or 2 * g - 2 + n <= 0:
        raise DomainError(f"(g, n) = ({g}, {n}) is not stable")


_CELLS: dict[tuple[int, int], list[CellPolytope]] = {}
_LOCK = threading.Lock()


def valence_three_cells(g: int, n: int, budget: int | None = None) -> list[CellPolytope]:
    """
    One CellPolytope per isomorphism class of connected genus-g fatgraphs with all valences
    >= 3 and n labeled boundaries. Up to relabeling tau0 is the standard permutation of its
    valence partition, so only tau1 and the boundary labeling are enumerated.
    """
    _stable(g, n)
    cached = _CELLS.get((g, n))
    if cached is not None:
        return cached
    cells: dict[Code, CellPolytope] = {}
    for edges in range(1, 6 * g - 6 + 3 * n + 1):
        size = 2 * edges
        vertices = 2 - 2 * g - n + edges
        if vertices < 1 or 3 * vertices > size:
            continue
        shapes = list(_partitions(size, vertices, 3))
        estimate = len(shapes) * double_factorial(size - 1) * math.factorial(n)
        check_dart_budget(size, estimate, budget, f"valence_three_cells(g={g}, n={n}, E={edges})")
        for shape in shapes:
            blocks, start = [], 0
            for part in shape:
                blocks.append(tuple(range(start, start + part)))
                start += part
            tau0 = Permutation.from_cycles(blocks, size)
            for tau1 in perfect_matchings(size):
                graph = Fatgraph(tau0, tau1)
                if graph.tau2.num_cycles() != n or not graph.is_connected():
                    continue
                for order in itertools.permutations(graph.boundaries):
                    labels = boundary_labels(size, order)
                    code, aut = graph.canonical_form(labels)
                    if code not in cells:
                        cells[code] = CellPolytope(graph, tuple(labels), aut, n)
    found = [cells[code] for code in sorted(cells)]
    logger.info(f"Found {len(found)} valence >= 3 fatgraph classes for (g, n) = ({g}, {n})")
    with _LOCK:
        return _CELLS.setdefault((g, n), found)


def lattice_count(g: int, mu: Sequence[int], budget: int | None = None) -> Fraction:
    """N_{g,n}(mu) by summing lattice points over the cells."""
    mu = tuple(mu)
    if not mu or any(part < 1 for part in mu):
        raise DomainError(f"lattice_count needs positive boundary lengths, got {mu}")
    cells = valence_three_cells(g, len(mu), budget)
    if sum(mu) % 2:
        return Fraction(0)
    return sum((Fraction(cell.count(mu), cell.aut) for cell in cells), Fraction(0))


def _class_interpolant(
    g: int, n: int, residue: Sequence[int], held_out: int | None, seed: int | None, budget: int | None
) -> MultiPolynomial:
    D = 6 * g - 6 + 2 * n
    bases = [r or 2 for r in residue]
    axis_nodes = [[base + 2 * k for k in range(D + 1)] for base in bases]
    samples = []
    for index in lower_index_set([D + 1] * n, D):
        point = tuple(axis_nodes[axis][i] for axis, i in enumerate(index))
        samples.append((point, lattice_count(g, point, budget)))
    poly = interpolate(samples, D, n)
    rng = random.Random(settings.HELD_OUT_SEED if seed is None else seed)
    for _ in range(settings.HELD_OUT_POINTS if held_out is None else held_out):
        point = tuple(base + 2 * rng.randrange(D + 2) for base in bases)
        expected = lattice_count(g, point, budget)
        if poly.evaluate(point) != expected:
            raise InterpolationError(
                f"N_{{{g},{n}}} branch {tuple(residue)} gives {poly.evaluate(point)} at {point}, count is {expected}"
            )
    return poly


def lattice_quasipolynomial(
    g: int, n: int, held_out: int | None = None, seed: int | None = None, budget: int | None = None
) -> QuasiPolynomial:
    """N_{g,n} as a quasi-polynomial modulo 2 of degree 6g-6+2n, one branch per parity class."""
    _stable(g, n)
    branches = {}
    for residue in itertools.product(range(2), repeat=n):
        if sum(residue) % 2 == 0:
            branches[residue] = _class_interpolant(g, n, residue, held_out, seed, budget)
    return QuasiPolynomial(2, n, branches)


def euler_characteristic(
    g: int, n: int, held_out: int | None = None, seed: int | None = None, budget: int | None = None
) -> Fraction:
    """chi(M_{g,n}) = N_{g,n}(0, ..., 0), read off the all-even branch."""
    _stable(g, n)
    poly = _class_interpolant(g, n, (0,) * n, held_out, seed, budget)
    return poly.evaluate((0,) * n)


def clear_cells() -> None:
    with _LOCK:
        _CELLS.clear()
