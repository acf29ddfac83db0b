# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""Closed forms of the pruned numbers, reconstructed by exact interpolation of recursion values."""

import itertools
import random
import threading
from collections.abc import Sequence

from loguru import logger

from coreason_hurwitz.arith.interpolation import grid_points, interpolate, lower_index_set
from coreason_hurwitz.arith.polynomial import MultiPolynomial, QuasiPolynomial
from coreason_hurwitz.config import settings
from coreason_hurwitz.exceptions import DomainError, InterpolationError
from coreason_hurwitz.recursion.pruned import pruned_orbifold_value, pruned_simple_value
from coreason_hurwitz.schemas import OrbifoldIncidence, OrbifoldRecursion

_POLYNOMIALS: dict[tuple[int, int], MultiPolynomial] = {}
_QUASI: dict[tuple[int, int, int, str, str], QuasiPolynomial] = {}
_LOCK = threading.Lock()


def degree_bound(g: int, n: int) -> int:
    if g < 0 or n < 1 or 2 * g - 2 + n <= 0:
        raise DomainError(f"(g, n) = ({g}, {n}) is not stable")
    return 6 * g - 6 + 3 * n


def _held_out(rng: random.Random, bases: Sequence[int], step: int, top: int) -> tuple[int, ...]:
    return tuple(base + step * rng.randrange(top) for base in bases)


def pruned_simple_polynomial(
    g: int, n: int, held_out: int | None = None, seed: int | None = None
) -> MultiPolynomial:
    """
    The symmetric polynomial K^_{g,n}(mu1, ..., mun) of degree 6g-6+3n.
    Built on the nodes 1..D+1 and checked against the recursion at random held-out tuples
    with entries <= 2D; any disagreement raises InterpolationError.
    """
    D = degree_bound(g, n)
    cached = _POLYNOMIALS.get((g, n))
    if cached is not None:
        return cached
    points = grid_points(n, D, range(1, D + 2), symmetric=True)
    samples = [(p, pruned_simple_value(g, p)) for p in points]
    poly = interpolate(samples, D, n, symmetric=True)

    rng = random.Random(settings.HELD_OUT_SEED if seed is None else seed)
    for _ in range(settings.HELD_OUT_POINTS if held_out is None else held_out):
        point = _held_out(rng, (1,) * n, 1, 2 * D)
        expected = pruned_simple_value(g, point)
        if poly.evaluate(point) != expected:
            raise InterpolationError(
                f"K^_{{{g},{n}}} interpolant gives {poly.evaluate(point)} at {point}, recursion gives {expected}"
            )
    logger.info(f"Reconstructed K^_{{{g},{n}}} from {len(points)} grid values (degree {poly.degree})")
    with _LOCK:
        return _POLYNOMIALS.setdefault((g, n), poly)


def pruned_orbifold_quasipolynomial(
    a: int,
    g: int,
    n: int,
    held_out: int | None = None,
    seed: int | None = None,
    recursion: OrbifoldRecursion | None = None,
    incidence: OrbifoldIncidence | None = None,
    budget: int | None = None,
) -> QuasiPolynomial:
    """
    K^[a]_{g,n} as a quasi-polynomial modulo a: one interpolant of degree <= 6g-6+3n per
    residue class with sum divisible by a. Other classes vanish identically.
    """
    if a < 1:
        raise DomainError(f"a must be positive, got {a}")
    D = degree_bound(g, n)
    recursion = OrbifoldRecursion(recursion or settings.ORBIFOLD_RECURSION)
    incidence = OrbifoldIncidence(incidence or settings.ORBIFOLD_INCIDENCE)
    key = (a, g, n, recursion.value, incidence.value)
    cached = _QUASI.get(key)
    if cached is not None:
        return cached
    rng = random.Random(settings.HELD_OUT_SEED if seed is None else seed)
    checks = settings.HELD_OUT_POINTS if held_out is None else held_out
    branches = {}
    for residue in itertools.product(range(a), repeat=n):
        if sum(residue) % a:
            continue
        bases = [r or a for r in residue]
        axis_nodes = [[base + a * k for k in range(D + 1)] for base in bases]
        samples = []
        for index in lower_index_set([D + 1] * n, D):
            point = tuple(axis_nodes[axis][i] for axis, i in enumerate(index))
            samples.append((point, pruned_orbifold_value(a, g, point, recursion, incidence, budget)))
        poly = interpolate(samples, D, n)
        for _ in range(checks):
            point = _held_out(rng, bases, a, 2 * D)
            expected = pruned_orbifold_value(a, g, point, recursion, incidence, budget)
            if poly.evaluate(point) != expected:
                raise InterpolationError(
                    f"K^[{a}]_{{{g},{n}}} branch {residue} gives {poly.evaluate(point)} at {point}, "
                    f"recursion gives {expected}"
                )
        branches[residue] = poly
    quasi = QuasiPolynomial(a, n, branches)
    logger.info(f"Reconstructed K^[{a}]_{{{g},{n}}} on {len(branches)} residue classes")
    with _LOCK:
        return _QUASI.setdefault(key, quasi)


def clear_polynomials() -> None:
    with _LOCK:
        _POLYNOMIALS.clear()
        _QUASI.clear()
