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
Cut-and-join recursions for the normalized pruned numbers K^_{g,n}(mu) = K_{g,n}(mu) / m!.

Both recursions share one shape. For 2g-2+n > 0,

    m K^(mu) = sum_{i<j} mu_i mu_j sum_{alpha + a beta = mu_i + mu_j + a} beta K^_{g,n-1}(mu_S, alpha)
             + 1/2 sum_i mu_i sum_{alpha + beta + c gamma = mu_i + c} gamma
                   [K^_{g-1,n+1}(mu_S, alpha, beta) + sum K^_{g1}(mu_I, alpha) K^_{g2}(mu_J, beta)]

with a = c = 1 for simple numbers. The splitting sum runs over ordered pairs (I, J) and drops
every summand that involves K^_{0,1} or K^_{0,2}.

The shape holds from (0,4) and (1,1) on. Fed with K^_{0,2} it does not reproduce K^_{0,3}, so
(0,3) is a base case: K^_{0,3}(mu) = mu1 mu2 mu3. K^_{0,2} only enters the genus-reducing term of (1,1).
"""

import itertools
import math
from collections.abc import Callable, Sequence
from fractions import Fraction

from loguru import logger

from coreason_hurwitz.arith.numbers import eulerian, factorial
from coreason_hurwitz.config import settings
from coreason_hurwitz.exceptions import DomainError
from coreason_hurwitz.oracle.factorizations import count_orbifold, count_simple, transposition_count
from coreason_hurwitz.pruning.transforms import transform_simple
from coreason_hurwitz.recursion.cache import HurwitzKey, MemoCache
from coreason_hurwitz.schemas import OrbifoldIncidence, OrbifoldRecursion, TransformDirection

PRUNED_CACHE: MemoCache[HurwitzKey] = MemoCache("pruned")

Lookup = Callable[[int, tuple[int, ...]], Fraction]


def _validate(g: int, mu: Sequence[int]) -> tuple[int, ...]:
    if g < 0:
        raise DomainError(f"Genus must be non-negative, got {g}")
    if not mu or any(part < 1 for part in mu):
        raise DomainError(f"mu must be a non-empty tuple of positive integers, got {tuple(mu)}")
    return tuple(mu)


def pruned_two_face(mu1: int, mu2: int) -> Fraction:
    """K^_{0,2}(mu1, mu2) = mu1 mu2 A(mu1+mu2-1, mu1-1) / (mu1+mu2)!."""
    return Fraction(mu1 * mu2 * eulerian(mu1 + mu2 - 1, mu1 - 1), factorial(mu1 + mu2))


def _is_unstable(g: int, n: int) -> bool:
    return g == 0 and n <= 2


def _is_base(g: int, n: int) -> bool:
    return g == 0 and n <= 3


def _split_sum(g: int, rest: tuple[int, ...], alpha: int, beta: int, value: Lookup) -> Fraction:
    total = Fraction(0)
    count = len(rest)
    for g1 in range(g + 1):
        g2 = g - g1
        for mask in range(1 << count):
            left = tuple(rest[k] for k in range(count) if mask >> k & 1)
            right = tuple(rest[k] for k in range(count) if not mask >> k & 1)
            if _is_unstable(g1, len(left) + 1) or _is_unstable(g2, len(right) + 1):
                continue
            first = value(g1, left + (alpha,))
            if first:
                total += first * value(g2, right + (beta,))
    return total


def recursion_rhs(g: int, mu: tuple[int, ...], value: Lookup, a: int = 1, c: int = 1) -> Fraction:
    """Right-hand side of the shared cut-and-join shape; `c` scales gamma in the second sum."""
    n = len(mu)
    total = Fraction(0)
    for i, j in itertools.combinations(range(n), 2):
        rest = tuple(mu[k] for k in range(n) if k not in (i, j))
        s = mu[i] + mu[j] + a
        inner = Fraction(0)
        for beta in range(1, (s - 1) // a + 1):
            inner += beta * value(g, rest + (s - a * beta,))
        total += mu[i] * mu[j] * inner
    for i in range(n):
        rest = mu[:i] + mu[i + 1 :]
        s = mu[i] + c
        inner = Fraction(0)
        for gamma in range(1, (s - 2) // c + 1):
            for alpha in range(1, s - c * gamma):
                beta = s - c * gamma - alpha
                term = _split_sum(g, rest, alpha, beta, value)
                if g >= 1:
                    term += value(g - 1, rest + (alpha, beta))
                inner += gamma * term
        total += Fraction(mu[i], 2) * inner
    return total


def pruned_simple_value(g: int, mu: Sequence[int]) -> Fraction:
    """K^_{g,n}(mu), memoized on the sorted tuple."""
    mu = _validate(g, mu)
    key = HurwitzKey.canonical("pruned-simple", 1, g, mu)
    cached = PRUNED_CACHE.get(key)
    if cached is not None:
        return cached
    n = len(mu)
    if g == 0 and n == 1:
        value = Fraction(0)
    elif g == 0 and n == 2:
        value = pruned_two_face(*mu)
    elif g == 0 and n == 3:
        value = Fraction(math.prod(mu))
    else:
        m = transposition_count(g, mu)
        value = recursion_rhs(g, key.mu, pruned_simple_value) / m
    logger.debug(f"K^_{{{g},{n}}}{key.mu} = {value}")
    return PRUNED_CACHE.publish(key, value)


def orbifold_variant(recursion: OrbifoldRecursion, incidence: OrbifoldIncidence) -> str:
    """Cache label; the default conventions keep the plain family name."""
    if recursion == OrbifoldRecursion.PRINTED and incidence == OrbifoldIncidence.FACTOR:
        return "pruned-orbifold"
    return f"pruned-orbifold:{recursion.value}:{incidence.value}"


def pruned_orbifold_value(
    a: int,
    g: int,
    mu: Sequence[int],
    recursion: OrbifoldRecursion | None = None,
    incidence: OrbifoldIncidence | None = None,
    budget: int | None = None,
) -> Fraction:
    """
    K^[a]_{g,n}(mu) = K^[a]_{g,n}(mu) / m! with m = 2g-2+n+|mu|/a.

    The (0,1), (0,2) and (0,3) base cases come from the pruned orbifold oracle. `recursion` picks
    the second-sum constraint: `printed` uses alpha+beta+gamma = mu_i+1, `balanced` uses
    alpha+beta+a gamma = mu_i+a. For a = 1 both reduce to the simple recursion.
    """
    if a < 1:
        raise DomainError(f"a must be positive, got {a}")
    mu = _validate(g, mu)
    if a == 1:
        return pruned_simple_value(g, mu)
    if sum(mu) % a:
        return Fraction(0)
    recursion = OrbifoldRecursion(recursion or settings.ORBIFOLD_RECURSION)
    incidence = OrbifoldIncidence(incidence or settings.ORBIFOLD_INCIDENCE)
    key = HurwitzKey.canonical(orbifold_variant(recursion, incidence), a, g, mu)
    cached = PRUNED_CACHE.get(key)
    if cached is not None:
        return cached
    m = transposition_count(g, mu, a)
    if _is_base(g, len(mu)):
        count = count_orbifold(a, g, key.mu, pruned=True, budget=budget, incidence=incidence)
        value = Fraction(count, math.factorial(m))
    else:

        def lower(g_: int, mu_: tuple[int, ...]) -> Fraction:
            return pruned_orbifold_value(a, g_, mu_, recursion, incidence, budget)

        c = a if recursion == OrbifoldRecursion.BALANCED else 1
        value = recursion_rhs(g, key.mu, lower, a=a, c=c) / m
    logger.debug(f"K^[{a}]_{{{g},{len(mu)}}}{key.mu} ({key.variant}) = {value}")
    return PRUNED_CACHE.publish(key, value)


def unpruned_simple_value(g: int, mu: Sequence[int]) -> Fraction:
    """H^_{g,n}(mu) = H_{g,n}(mu)/m! through the pruning transform of recursion values."""
    mu = _validate(g, mu)
    if g == 0 and len(mu) == 1:
        # The transform excludes (0,1); a single face of genus zero is a rooted tree.
        return Fraction(mu[0]) ** (mu[0] - 2) / math.factorial(mu[0] - 1)
    return transform_simple(TransformDirection.PRUNED_TO_FULL, g, mu, pruned_simple_value)


def oracle_unpruned_value(g: int, mu: Sequence[int], budget: int | None = None) -> Fraction:
    """H^_{g,n}(mu) straight from the factorization oracle."""
    m = transposition_count(g, mu)
    return Fraction(count_simple(g, mu, pruned=False, budget=budget), math.factorial(m))
