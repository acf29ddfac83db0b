# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""Rooted-forest counts behind the pruning correspondences."""

import itertools
import math
from fractions import Fraction

from coreason_hurwitz.arith.numbers import stirling2
from coreason_hurwitz.budget import check_budget_guardrail
from coreason_hurwitz.exceptions import DomainError


def rooted_forest_count(mu: int, nu: int) -> int:
    """Forests on mu labeled vertices made of nu trees rooted at nu given vertices: nu mu^(mu-nu-1)."""
    if nu < 1 or mu < 1:
        raise DomainError(f"rooted_forest_count needs positive arguments, got ({mu}, {nu})")
    if nu > mu:
        return 0
    if nu == mu:
        return 1
    return nu * mu ** (mu - nu - 1)


def forest_count(mu: int, nu: int) -> int:
    """
    Ways to rebuild a face of perimeter mu from a pruned face of perimeter nu: mu^(mu-nu).
    This is (mu/nu) T(mu, nu), the extra factor choosing where the boundary label lands.
    """
    if nu < 1 or mu < 1:
        raise DomainError(f"forest_count needs positive arguments, got ({mu}, {nu})")
    if nu > mu:
        return 0
    return mu ** (mu - nu)


def forest_count_orbifold(a: int, k: int, e: int) -> int:
    """Weighted count k (a e + k)^(e-1) of forests with k roots and e edges, weight a per internal edge."""
    if a < 1 or k < 1 or e < 0:
        raise DomainError(f"forest_count_orbifold needs a, k >= 1 and e >= 0, got ({a}, {k}, {e})")
    if e == 0:
        return 1
    return k * (a * e + k) ** (e - 1)


def enumerate_rooted_forests(mu: int, nu: int, budget: int | None = None) -> int:
    """
    Brute-force count of rooted_forest_count: every non-root vertex picks a parent and the
    choice is kept when following parents always ends at one of the roots 0..nu-1.
    """
    if nu < 1 or mu < 1:
        raise DomainError(f"enumerate_rooted_forests needs positive arguments, got ({mu}, {nu})")
    if nu > mu:
        return 0
    check_budget_guardrail(mu ** (mu - nu), budget, f"enumerate_rooted_forests({mu}, {nu})")
    count = 0
    for parents in itertools.product(range(mu), repeat=mu - nu):
        parent = list(range(nu)) + list(parents)
        if all(_reaches_root(v, parent, nu) for v in range(nu, mu)):
            count += 1
    return count


def _reaches_root(v: int, parent: list[int], roots: int) -> bool:
    seen = set()
    while v >= roots:
        if v in seen:
            return False
        seen.add(v)
        v = parent[v]
    return True


def forest_identity(mu: int, d: int) -> Fraction:
    """
    Residual of the triangular system sum_{nu<=mu} q_d(nu) nu mu^(mu-nu)/(mu-nu)! = mu^(mu+d+1)/mu!,
    with q_d(nu) = S(nu+d, nu). Zero whenever the system holds.
    """
    if mu < 1 or d < 0:
        raise DomainError(f"forest_identity needs mu >= 1 and d >= 0, got ({mu}, {d})")
    lhs = sum(
        (Fraction(stirling2(nu + d, nu) * nu * mu ** (mu - nu), math.factorial(mu - nu)) for nu in range(1, mu + 1)),
        Fraction(0),
    )
    return lhs - Fraction(mu ** (mu + d + 1), math.factorial(mu))
