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
The Gromov-Witten quasi-polynomials N_{g,n} of P^1 from the packaged table, the two relations
they satisfy, and their overlap with cycle Hurwitz numbers.
"""

import itertools
from collections.abc import Sequence
from fractions import Fraction

from loguru import logger

from coreason_hurwitz.arith.polynomial import QuasiPolynomial
from coreason_hurwitz.exceptions import DomainError, UnsupportedError
from coreason_hurwitz.oracle.factorizations import count_cycle
from coreason_hurwitz.schemas import CheckStatus, GwRelation
from coreason_hurwitz.tables import load_tables


def gw_eval(g: int, mu: Sequence[int]) -> Fraction:
    """Evaluates the table branch picked by the number of odd entries of mu."""
    mu = tuple(mu)
    if any(part < 0 for part in mu):
        raise DomainError(f"Entries must be non-negative, got {mu}")
    odd = sum(part % 2 for part in mu)
    for row in load_tables().gw_rows(g, len(mu)):
        if odd in row.odd:
            return row.polynomial(len(mu)).evaluate(mu)
    raise UnsupportedError(f"No branch with {odd} odd entries for (g, n) = ({g}, {len(mu)})")


def gw_quasipolynomial_row(g: int, n: int) -> QuasiPolynomial:
    branches = {}
    for residue in itertools.product(range(2), repeat=n):
        odd = sum(residue)
        for row in load_tables().gw_rows(g, n):
            if odd in row.odd:
                branches[residue] = row.polynomial(n)
    return QuasiPolynomial(2, n, branches)


def gw_relations_check(g: int, mu: Sequence[int], which: GwRelation) -> CheckStatus:
    """
    zero: N_{g,n+1}(0, mu) = sum_j sum_{k<=mu_j} k N_{g,n}(mu)|mu_j=k
    one:  N_{g,n+1}(1, mu) = the same sum + (chi - |mu|)/2 N_{g,n}(mu), chi = 2-2g-n

    Only instances whose left-hand side lies in the non-vanishing parity |mu'| = n+1 mod 2 are
    checked; the others are reported as skipped.
    """
    mu = tuple(mu)
    n = len(mu)
    first = 0 if which == GwRelation.ZERO else 1
    if (first + sum(mu)) % 2 != (n + 1) % 2:
        return CheckStatus.SKIPPED
    lhs = gw_eval(g, (first,) + mu)
    rhs = Fraction(0)
    for j in range(n):
        for k in range(1, mu[j] + 1):
            rhs += k * gw_eval(g, mu[:j] + (k,) + mu[j + 1 :])
    if which == GwRelation.ONE:
        rhs += Fraction(2 - 2 * g - n - sum(mu), 2) * gw_eval(g, mu)
    if lhs != rhs:
        logger.warning(f"Relation {which.value} fails at g={g}, mu={mu}: lhs {lhs}, rhs {rhs}")
        return CheckStatus.FAIL
    return CheckStatus.PASS


def satisfies_triangle(mu: Sequence[int]) -> bool:
    total = sum(mu)
    return all(2 * part <= total for part in mu)


def compare_N_P(mu: Sequence[int], budget: int | None = None) -> bool:
    """Whether the genus-zero table value N_{0,3}(mu) equals the cycle Hurwitz number P_{0,3}(mu)."""
    mu = tuple(mu)
    if len(mu) != 3 or any(part < 1 for part in mu) or sum(mu) % 2 == 0:
        raise DomainError(f"compare_N_P needs a triple of positive integers with odd sum, got {mu}")
    n_value = gw_eval(0, mu)
    p_value = count_cycle(0, mu, budget)
    logger.debug(f"N_{{0,3}}{mu} = {n_value}, P_{{0,3}}{mu} = {p_value}")
    return n_value == p_value
