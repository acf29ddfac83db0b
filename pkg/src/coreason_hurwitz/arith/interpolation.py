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
Exact Newton interpolation on lower (simplex-truncated) tensor grids.

For a polynomial of total degree D the tensor divided difference of order i vanishes when
|i| > D, so only grid points with index sum <= D are needed: the iterated univariate
Newton scheme runs along each axis over that downward-closed index set.
"""

import itertools
from collections.abc import Iterable, Sequence
from fractions import Fraction

from loguru import logger

from coreason_hurwitz.arith.polynomial import MultiPolynomial, Scalar
from coreason_hurwitz.exceptions import InterpolationError

Point = tuple[int, ...]


def lower_index_set(sizes: Sequence[int], degree_bound: int) -> list[tuple[int, ...]]:
    """All multi-indices i with i_a < sizes[a] and |i| <= degree_bound."""
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], budget: int) -> None:
        axis = len(prefix)
        if axis == len(sizes):
            out.append(prefix)
            return
        for i in range(min(sizes[axis] - 1, budget) + 1):
            extend(prefix + (i,), budget - i)

    extend((), degree_bound)
    return out


def grid_points(nvars: int, degree_bound: int, nodes: Sequence[int], symmetric: bool = False) -> list[Point]:
    """
    The points interpolate() needs when every axis uses `nodes`.
    With symmetric=True only sorted representatives are returned.
    """
    sizes = [min(len(nodes), degree_bound + 1)] * nvars
    points = {tuple(nodes[i] for i in index) for index in lower_index_set(sizes, degree_bound)}
    if symmetric:
        points = {tuple(sorted(p)) for p in points}
    return sorted(points)


def _newton_basis(nodes: Sequence[int], count: int, axis: int, nvars: int) -> list[MultiPolynomial]:
    basis = [MultiPolynomial.constant(1, nvars)]
    x = MultiPolynomial.variable(axis, nvars)
    for t in range(1, count):
        basis.append(basis[-1] * (x - nodes[t - 1]))
    return basis


def interpolate(
    samples: Iterable[tuple[Sequence[int], Scalar]],
    degree_bound: int,
    n: int,
    symmetric: bool = False,
) -> MultiPolynomial:
    """
    Returns the unique interpolant of total degree <= degree_bound through the samples.

    Nodes along each axis are the sorted distinct sample coordinates (the first
    degree_bound + 1 of them). Every point of the lower grid must be present, otherwise the
    data is under-determined. Samples outside the lower grid must agree with the result.
    With symmetric=True the samples are treated as values of a symmetric function and may be
    given on sorted representatives only.
    """
    table: dict[Point, Fraction] = {}
    for point, value in samples:
        key = tuple(int(p) for p in point)
        if len(key) != n:
            raise InterpolationError(f"Sample point {key} does not have {n} coordinates")
        if symmetric:
            key = tuple(sorted(key))
        value = Fraction(value)
        if key in table and table[key] != value:
            raise InterpolationError(f"Conflicting samples at {key}: {table[key]} vs {value}")
        table[key] = value
    if not table:
        raise InterpolationError("No samples given")
    if degree_bound < 0:
        raise InterpolationError(f"Degree bound must be non-negative, got {degree_bound}")

    def lookup(point: Point) -> Fraction | None:
        return table.get(tuple(sorted(point)) if symmetric else point)

    if symmetric:
        shared = sorted({c for p in table for c in p})
        axis_nodes = [shared[: degree_bound + 1]] * n
    else:
        axis_nodes = [sorted({p[a] for p in table})[: degree_bound + 1] for a in range(n)]
    sizes = [len(nodes) for nodes in axis_nodes]
    indices = lower_index_set(sizes, degree_bound)

    coef: dict[tuple[int, ...], Fraction] = {}
    used: set[Point] = set()
    for index in indices:
        point = tuple(axis_nodes[a][i] for a, i in enumerate(index))
        value = lookup(point)
        if value is None:
            raise InterpolationError(f"Under-determined: no sample at {point} for degree {degree_bound}")
        coef[index] = value
        used.add(tuple(sorted(point)) if symmetric else point)

    for axis in range(n):
        nodes = axis_nodes[axis]
        ordered = sorted(indices, key=lambda idx: idx[axis], reverse=True)
        for level in range(1, sizes[axis]):
            for index in ordered:
                i = index[axis]
                if i < level:
                    continue
                below = index[:axis] + (i - 1,) + index[axis + 1 :]
                coef[index] = (coef[index] - coef[below]) / (nodes[i] - nodes[i - level])

    bases = [_newton_basis(axis_nodes[a], sizes[a], a, n) for a in range(n)]
    result = MultiPolynomial.zero(n)
    for index, c in coef.items():
        if not c:
            continue
        term = MultiPolynomial.constant(c, n)
        for axis, i in enumerate(index):
            if i:
                term = term * bases[axis][i]
        result = result + term

    extra = [p for p in table if p not in used]
    for point in extra:
        probes = set(itertools.permutations(point)) if symmetric else {point}
        for probe in probes:
            if result.evaluate(probe) != table[point]:
                raise InterpolationError(
                    f"Inconsistent samples: interpolant gives {result.evaluate(probe)} at {probe}, "
                    f"sample is {table[point]}"
                )
    logger.debug(f"Interpolated {len(indices)} grid values (n={n}, degree<={degree_bound}, extra checks={len(extra)})")
    return result
