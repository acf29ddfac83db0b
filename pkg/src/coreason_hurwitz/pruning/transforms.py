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
Triangular correspondences between pruned and unpruned numbers.

Each family reads  F(mu) = sum_{nu} P(nu) prod_i w(mu_i, nu_i)  over nu <= mu componentwise
with nu_i = mu_i mod step, and w(mu, mu) = 1. Going back solves the system in ascending
lexicographic order of nu.
"""

import itertools
import math
from collections.abc import Callable, Sequence
from fractions import Fraction

from loguru import logger

from coreason_hurwitz.exceptions import DomainError
from coreason_hurwitz.pruning.providers import ValueProvider
from coreason_hurwitz.schemas import TransformDirection

Weight = Callable[[int, int], Fraction]


def simple_weight(mu: int, nu: int) -> Fraction:
    return Fraction(mu ** (mu - nu), math.factorial(mu - nu))


def orbifold_weight(a: int) -> Weight:
    def weight(mu: int, nu: int) -> Fraction:
        steps = (mu - nu) // a
        return Fraction(mu**steps, math.factorial(steps))

    return weight


def belyi_weight(mu: int, nu: int) -> Fraction:
    return Fraction(nu * math.comb(mu, (mu - nu) // 2), mu)


def _lattice(mu: tuple[int, ...], step: int) -> list[tuple[int, ...]]:
    axes = [range(part % step or step, part + 1, step) for part in mu]
    return sorted(itertools.product(*axes))


def _coefficient(mu: Sequence[int], nu: Sequence[int], weight: Weight) -> Fraction:
    return math.prod((weight(m, v) for m, v in zip(mu, nu, strict=True)), start=Fraction(1))


def _below(nu: tuple[int, ...], lattice: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return [other for other in lattice if other != nu and all(o <= v for o, v in zip(other, nu, strict=True))]


def lattice_transform(
    direction: TransformDirection,
    g: int,
    mu: Sequence[int],
    source: ValueProvider,
    step: int,
    weight: Weight,
) -> Fraction:
    """Applies or inverts the triangular system on the step-lattice below mu."""
    mu = tuple(mu)
    lattice = _lattice(mu, step)
    if direction == TransformDirection.PRUNED_TO_FULL:
        return sum((source(g, nu) * _coefficient(mu, nu, weight) for nu in lattice), Fraction(0))

    solved: dict[tuple[int, ...], Fraction] = {}
    for nu in lattice:
        value = source(g, nu)
        for other in _below(nu, lattice):
            value -= solved[other] * _coefficient(nu, other, weight)
        solved[nu] = value
    logger.debug(f"Solved {len(solved)} pruned values below g={g}, mu={mu}")
    return solved[mu]


def _check(g: int, mu: Sequence[int]) -> None:
    if g < 0 or not mu or any(part < 1 for part in mu):
        raise DomainError(f"Invalid arguments g={g}, mu={tuple(mu)}")
    if g == 0 and len(mu) == 1:
        raise DomainError("The pruning correspondence does not cover (g, n) = (0, 1)")


def transform_simple(
    direction: TransformDirection, g: int, mu: Sequence[int], source: ValueProvider
) -> Fraction:
    """H^(mu) = sum_nu K^(nu) prod mu_i^(mu_i-nu_i)/(mu_i-nu_i)!, or its inverse."""
    _check(g, mu)
    return lattice_transform(direction, g, mu, source, 1, simple_weight)


def transform_orbifold(
    a: int, direction: TransformDirection, g: int, mu: Sequence[int], source: ValueProvider
) -> Fraction:
    """The a-step version: nu_i = mu_i mod a, weight mu^((mu-nu)/a)/((mu-nu)/a)!."""
    if a < 1:
        raise DomainError(f"a must be positive, got {a}")
    _check(g, mu)
    return lattice_transform(direction, g, mu, source, a, orbifold_weight(a))


def transform_belyi(direction: TransformDirection, g: int, mu: Sequence[int], source: ValueProvider) -> Fraction:
    """
    M(mu) prod mu_i = sum_nu N(nu) prod nu_i binom(mu_i, (mu_i-nu_i)/2) over nu_i = mu_i mod 2.
    Stable (g, n) only: at (0, 1) the counts M(2) = 1/2 and N(2) = 0 break the relation.
    """
    if g < 0 or not mu or any(part < 1 for part in mu):
        raise DomainError(f"Invalid arguments g={g}, mu={tuple(mu)}")
    if 2 * g - 2 + len(mu) <= 0:
        raise DomainError(f"The Belyi pruning correspondence needs 2g-2+n > 0, got (g, n) = ({g}, {len(mu)})")
    return lattice_transform(direction, g, mu, source, 2, belyi_weight)
