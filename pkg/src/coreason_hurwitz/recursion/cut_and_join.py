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
Cut-and-join identities: the unpruned one checked on oracle values, and the pruned one
assembled symbolically from lower polynomials.
"""

import itertools
from collections.abc import Sequence
from fractions import Fraction

from loguru import logger

from coreason_hurwitz.arith.polynomial import MultiPolynomial, definite_sum, linear_form
from coreason_hurwitz.exceptions import DomainError
from coreason_hurwitz.oracle.factorizations import transposition_count
from coreason_hurwitz.recursion.polynomials import degree_bound, pruned_simple_polynomial
from coreason_hurwitz.recursion.pruned import oracle_unpruned_value


def verify_caj_simple(g: int, mu: Sequence[int], budget: int | None = None) -> bool:
    """
    Checks m H^_{g,n}(mu) = sum_{i<j} mu_i mu_j H^_{g,n-1}(mu_S, mu_i+mu_j)
        + 1/2 sum_i mu_i sum_{alpha+beta=mu_i} [H^_{g-1,n+1}(mu_S, alpha, beta) + sum H^ H^]
    with every H^ taken from the factorization oracle.
    """
    mu = tuple(mu)
    values: dict[tuple[int, tuple[int, ...]], Fraction] = {}

    def h(g_: int, mu_: tuple[int, ...]) -> Fraction:
        key = (g_, tuple(sorted(mu_)))
        if key not in values:
            values[key] = oracle_unpruned_value(g_, key[1], budget)
        return values[key]

    n = len(mu)
    lhs = transposition_count(g, mu) * h(g, mu)
    rhs = Fraction(0)
    for i, j in itertools.combinations(range(n), 2):
        rest = tuple(mu[k] for k in range(n) if k not in (i, j))
        rhs += mu[i] * mu[j] * h(g, rest + (mu[i] + mu[j],))
    for i in range(n):
        rest = mu[:i] + mu[i + 1 :]
        inner = Fraction(0)
        for alpha in range(1, mu[i]):
            beta = mu[i] - alpha
            if g >= 1:
                inner += h(g - 1, rest + (alpha, beta))
            for g1 in range(g + 1):
                for mask in range(1 << len(rest)):
                    left = tuple(rest[k] for k in range(len(rest)) if mask >> k & 1)
                    right = tuple(rest[k] for k in range(len(rest)) if not mask >> k & 1)
                    inner += h(g1, left + (alpha,)) * h(g - g1, right + (beta,))
        rhs += Fraction(mu[i], 2) * inner
    logger.debug(f"Unpruned cut-and-join at g={g}, mu={mu}: lhs={lhs}, rhs={rhs}")
    return lhs == rhs


def _lower(g: int, n: int) -> MultiPolynomial | None:
    """Lower ingredient K^_{g,n}; None when it vanishes identically."""
    if g == 0 and n == 1:
        return None
    if g == 0 and n == 2:
        raise DomainError("The symbolic recursion needs K^_{0,2}, which is not a polynomial")
    return pruned_simple_polynomial(g, n)


def symbolic_cut_and_join(g: int, n: int) -> MultiPolynomial:
    """
    Right-hand side of the pruned recursion as a polynomial in mu_1..mu_n, with the inner sums
    carried out by definite_sum. Needs polynomial ingredients only, e.g. (0,4) and (1,2).
    """
    degree_bound(g, n)
    size = n + 2
    x = [MultiPolynomial.variable(k, size) for k in range(size)]
    alpha, beta = x[n], x[n + 1]
    one = MultiPolynomial.constant(1, size)
    rhs = MultiPolynomial.zero(size)

    for i, j in itertools.combinations(range(n), 2):
        lower = _lower(g, n - 1)
        if lower is None:
            continue
        rest = [x[k] for k in range(n) if k not in (i, j)]
        summand = lower.compose(rest + [alpha]) * (x[i] + x[j] + one - alpha)
        rhs = rhs + x[i] * x[j] * definite_sum(summand, n, x[i] + x[j])

    for i in range(n):
        rest_index = [k for k in range(n) if k != i]
        bracket = MultiPolynomial.zero(size)
        if g >= 1:
            lower = _lower(g - 1, n + 1)
            if lower is not None:
                bracket = bracket + lower.compose([x[k] for k in rest_index] + [alpha, beta])
        for g1 in range(g + 1):
            for mask in range(1 << len(rest_index)):
                left = [x[k] for b, k in enumerate(rest_index) if mask >> b & 1]
                right = [x[k] for b, k in enumerate(rest_index) if not mask >> b & 1]
                if (g1 == 0 and len(left) < 2) or (g - g1 == 0 and len(right) < 2):
                    continue
                first = _lower(g1, len(left) + 1)
                second = _lower(g - g1, len(right) + 1)
                if first is None or second is None:
                    continue
                bracket = bracket + first.compose(left + [alpha]) * second.compose(right + [beta])
        summand = (x[i] + one - alpha - beta) * bracket
        inner = definite_sum(summand, n + 1, x[i] - alpha)
        rhs = rhs + x[i] * definite_sum(inner, n, x[i] - one) / 2

    project = [MultiPolynomial.variable(k, n) for k in range(n)] + [MultiPolynomial.zero(n)] * 2
    return rhs.compose(project)


def _m_polynomial(g: int, n: int) -> MultiPolynomial:
    return linear_form([1] * n, 2 * g - 2 + n)


def check_divisibility(g: int, n: int) -> bool:
    """Whether the symbolic right-hand side is divisible by m = 2g-2+n+|mu| as a polynomial."""
    _, remainder = symbolic_cut_and_join(g, n).divmod(_m_polynomial(g, n))
    return remainder.is_zero()


def symbolic_pruned_polynomial(g: int, n: int) -> MultiPolynomial:
    """K^_{g,n} obtained as the exact quotient of the symbolic right-hand side by m."""
    quotient, remainder = symbolic_cut_and_join(g, n).divmod(_m_polynomial(g, n))
    if not remainder.is_zero():
        raise DomainError(f"Symbolic cut-and-join for ({g}, {n}) leaves remainder {remainder}")
    return quotient
