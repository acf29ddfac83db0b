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
Intersection numbers read off a pruned polynomial:

    K^_{g,n}(nu) = prod nu_i * sum_{|d| + l = 3g-3+n} (-1)^l <tau_d1 ... tau_dn lambda_l>_g prod q_di(nu_i)
"""

from fractions import Fraction
from typing import NamedTuple

from coreason_hurwitz.arith.numbers import double_factorial
from coreason_hurwitz.arith.polynomial import MultiPolynomial, format_rational
from coreason_hurwitz.exceptions import InterpolationError
from coreason_hurwitz.intersection.qpoly import q_polynomial
from coreason_hurwitz.schemas import BracketRecord


class BracketKey(NamedTuple):
    g: int
    d: tuple[int, ...]
    ell: int


def divide_by_variables(poly: MultiPolynomial) -> MultiPolynomial:
    terms = {}
    for exp, coef in poly.items():
        if any(e == 0 for e in exp):
            raise InterpolationError(f"Polynomial is not divisible by the product of its variables: term {exp}")
        terms[tuple(e - 1 for e in exp)] = coef
    return MultiPolynomial(poly.nvars, terms)


def _to_q_basis(poly: MultiPolynomial, axis: int) -> dict[int, MultiPolynomial]:
    """Writes poly as sum_d c_d q_d(x_axis) with c_d free of x_axis, top degree first."""
    n = poly.nvars
    x = MultiPolynomial.variable(axis, n)
    out: dict[int, MultiPolynomial] = {}
    remaining = poly
    while not remaining.is_zero() and remaining.degree_in(axis) > 0:
        top = remaining.degree_in(axis)
        if top % 2:
            raise InterpolationError(f"Odd degree {top} in variable {axis} has no q-basis expansion")
        d = top // 2
        # leading coefficient of q_d is 1/(2d)!!
        coef = remaining.split_by_variable(axis)[top] * double_factorial(2 * d)
        out[d] = coef
        remaining = remaining - coef * q_polynomial(d).compose([x])
    if not remaining.is_zero():
        out[0] = out.get(0, MultiPolynomial.zero(n)) + remaining
    return out


def extract_brackets(g: int, n: int, khat: MultiPolynomial) -> dict[BracketKey, Fraction]:
    """
    Changes basis from monomials to products of q_d, one variable at a time, and reports
    <tau_d lambda_l>_g with l = 3g-3+n-|d| and the sign (-1)^l removed.
    """
    if khat.nvars != n:
        raise InterpolationError(f"Polynomial has {khat.nvars} variables, expected {n}")
    dimension = 3 * g - 3 + n
    layers: dict[tuple[int, ...], MultiPolynomial] = {(): divide_by_variables(khat)}
    for axis in range(n):
        expanded: dict[tuple[int, ...], MultiPolynomial] = {}
        for prefix, poly in layers.items():
            for d, coef in _to_q_basis(poly, axis).items():
                expanded[prefix + (d,)] = coef
        layers = expanded
    brackets: dict[BracketKey, Fraction] = {}
    for d, coef in layers.items():
        value = coef.coefficient((0,) * n)
        if not value:
            continue
        ell = dimension - sum(d)
        if ell < 0:
            raise InterpolationError(f"Term q_{d} exceeds the dimension {dimension} of M_({g},{n})")
        brackets[BracketKey(g, d, ell)] = value * (-1) ** ell
    return brackets


def bracket_records(brackets: dict[BracketKey, Fraction]) -> list[BracketRecord]:
    return [
        BracketRecord(g=key.g, d=list(key.d), ell=key.ell, value=format_rational(value))
        for key, value in sorted(brackets.items())
    ]
