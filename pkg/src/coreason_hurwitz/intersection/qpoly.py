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
The q_d polynomials, q_d(nu) = S(nu+d, nu), and the summation polynomials P_i and P_{i,j}
that turn the pruned recursion into an identity between polynomials.
"""

import threading
from collections.abc import Sequence

from loguru import logger

from coreason_hurwitz.arith.interpolation import interpolate
from coreason_hurwitz.arith.numbers import stirling2
from coreason_hurwitz.arith.polynomial import MultiPolynomial, definite_sum, discrete_antiderivative, shift
from coreason_hurwitz.exceptions import DomainError, InterpolationError

_Q: dict[int, MultiPolynomial] = {}
_P_SINGLE: dict[int, MultiPolynomial] = {}
_P_DOUBLE: dict[tuple[int, int], MultiPolynomial] = {}
_LOCK = threading.Lock()


def q_polynomial(d: int) -> MultiPolynomial:
    """The degree-2d polynomial with q_d(nu) = S(nu+d, nu), checked against q_d(nu) - q_d(nu-1) = nu q_{d-1}(nu)."""
    if d < 0:
        raise DomainError(f"q_d needs d >= 0, got {d}")
    cached = _Q.get(d)
    if cached is not None:
        return cached
    samples = [((nu,), stirling2(nu + d, nu)) for nu in range(1, 2 * d + 3)]
    poly = interpolate(samples, 2 * d, 1)
    if d > 0:
        x = MultiPolynomial.variable(0, 1)
        if poly - shift(poly, 0, -1) != x * q_polynomial(d - 1):
            raise InterpolationError(f"q_{d} fails the difference recurrence")
    with _LOCK:
        return _Q.setdefault(d, poly)


def q_recurrences_hold(d: int) -> bool:
    """Both recurrences: q_{d+1}(nu) = sum_{i<=nu} i q_d(i) and q_{d+1}(nu) = q_{d+1}(nu-1) + nu q_d(nu)."""
    x = MultiPolynomial.variable(0, 1)
    lower, upper = q_polynomial(d), q_polynomial(d + 1)
    summed = discrete_antiderivative(x * lower)
    return summed == upper and upper - shift(upper, 0, -1) == x * lower


def p_single(i: int) -> MultiPolynomial:
    """P_i(x, y) = sum_{alpha+beta=x+y+1} alpha beta q_i(alpha), a polynomial of degree 2i+3."""
    if i < 0:
        raise DomainError(f"P_i needs i >= 0, got {i}")
    cached = _P_SINGLE.get(i)
    if cached is not None:
        return cached
    # variables (alpha, N) with N = x + y + 1
    alpha = MultiPolynomial.variable(0, 2)
    total = MultiPolynomial.variable(1, 2)
    summand = alpha * (total - alpha) * q_polynomial(i).compose([alpha])
    summed = definite_sum(summand, 0, total - 1)
    x, y = MultiPolynomial.variable(0, 2), MultiPolynomial.variable(1, 2)
    poly = summed.compose([MultiPolynomial.zero(2), x + y + 1])
    with _LOCK:
        return _P_SINGLE.setdefault(i, poly)


def p_double(i: int, j: int) -> MultiPolynomial:
    """P_{i,j}(x) = sum_{alpha+beta+gamma=x+1} alpha beta gamma q_i(alpha) q_j(beta), of degree 2i+2j+5."""
    if i < 0 or j < 0:
        raise DomainError(f"P_(i,j) needs i, j >= 0, got ({i}, {j})")
    cached = _P_DOUBLE.get((i, j))
    if cached is not None:
        return cached
    # variables (alpha, beta, x)
    alpha, beta, x = (MultiPolynomial.variable(k, 3) for k in range(3))
    gamma = x + 1 - alpha - beta
    summand = alpha * beta * gamma * q_polynomial(i).compose([alpha]) * q_polynomial(j).compose([beta])
    inner = definite_sum(summand, 1, x - alpha)
    outer = definite_sum(inner, 0, x - 1)
    zero = MultiPolynomial.zero(1)
    poly = outer.compose([zero, zero, MultiPolynomial.variable(0, 1)])
    logger.debug(f"P_({i},{j}) has degree {poly.degree}")
    with _LOCK:
        return _P_DOUBLE.setdefault((i, j), poly)


def composition_power_sum(k: Sequence[int]) -> MultiPolynomial:
    """
    sum over compositions alpha_1 + ... + alpha_m = N (all alpha_i >= 1) of prod alpha_i^k_i,
    as a polynomial in N of degree |k| + m - 1.
    """
    if not k or any(part < 0 for part in k):
        raise DomainError(f"composition_power_sum needs a non-empty tuple of non-negative exponents, got {tuple(k)}")
    poly = MultiPolynomial.monomial((k[0],))
    alpha = MultiPolynomial.variable(0, 2)
    total = MultiPolynomial.variable(1, 2)
    project = [MultiPolynomial.zero(1), MultiPolynomial.variable(0, 1)]
    for exponent in k[1:]:
        summand = alpha**exponent * poly.compose([total - alpha])
        poly = definite_sum(summand, 0, total - 1).compose(project)
    return poly


def clear_polynomials() -> None:
    with _LOCK:
        _Q.clear()
        _P_SINGLE.clear()
        _P_DOUBLE.clear()
