# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from coreason_hurwitz.arith.interpolation import grid_points, interpolate, lower_index_set
from coreason_hurwitz.arith.numbers import (
    basic_combinatorics,
    bernoulli,
    binomial,
    double_factorial,
    eulerian,
    factorial,
    stirling2,
)
from coreason_hurwitz.arith.polynomial import (
    MultiPolynomial,
    QuasiPolynomial,
    definite_sum,
    discrete_antiderivative,
    format_rational,
    monomial_symmetric,
    parse_rational,
    polynomial_from_json,
    polynomial_to_json,
    power_sum_polynomial,
    quasipolynomial_to_json,
)

__all__ = [
    "MultiPolynomial",
    "QuasiPolynomial",
    "basic_combinatorics",
    "bernoulli",
    "binomial",
    "definite_sum",
    "discrete_antiderivative",
    "double_factorial",
    "eulerian",
    "factorial",
    "format_rational",
    "grid_points",
    "interpolate",
    "lower_index_set",
    "monomial_symmetric",
    "parse_rational",
    "polynomial_from_json",
    "polynomial_to_json",
    "power_sum_polynomial",
    "quasipolynomial_to_json",
    "stirling2",
]
