# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from fractions import Fraction

import pytest

from coreason_hurwitz.arith import (
    basic_combinatorics,
    bernoulli,
    binomial,
    double_factorial,
    eulerian,
    factorial,
    stirling2,
)
from coreason_hurwitz.exceptions import DomainError


def test_factorials() -> None:
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(7) == 105
    assert double_factorial(8) == 384


def test_binomial() -> None:
    assert binomial(5, 2) == 10
    assert binomial(4, 0) == 1


@pytest.mark.parametrize(
    "kind, args",
    [
        ("factorial", (-1,)),
        ("double_factorial", (-3,)),
        ("binomial", (3, 4)),
        ("binomial", (-1, 0)),
    ],
)
def test_negative_arguments_rejected(kind: str, args: tuple[int, ...]) -> None:
    """Arguments outside the domain raise DomainError."""
    with pytest.raises(DomainError):
        basic_combinatorics(kind, *args)


def test_basic_combinatorics_dispatch() -> None:
    assert basic_combinatorics("factorial", 4) == 24
    assert basic_combinatorics("double_factorial", 5) == 15
    assert basic_combinatorics("binomial", 6, 3) == 20
    with pytest.raises(DomainError, match="Unknown combinatorial kind"):
        basic_combinatorics("catalan", 3)


def test_eulerian_rows() -> None:
    """Rows of the Eulerian triangle and their row sums."""
    assert [eulerian(1, k) for k in range(1)] == [1]
    assert [eulerian(2, k) for k in range(2)] == [1, 1]
    assert [eulerian(3, k) for k in range(3)] == [1, 4, 1]
    assert [eulerian(4, k) for k in range(4)] == [1, 11, 11, 1]
    assert sum(eulerian(6, k) for k in range(6)) == 720


def test_eulerian_outside_range() -> None:
    assert eulerian(0, 0) == 1
    assert eulerian(0, 1) == 0
    assert eulerian(3, 3) == 0
    assert eulerian(3, -1) == 0
    assert eulerian(-1, 0) == 0


def test_stirling2() -> None:
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    assert stirling2(0, 0) == 1
    assert stirling2(3, 0) == 0
    assert stirling2(3, 4) == 0


def test_bernoulli() -> None:
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    with pytest.raises(DomainError):
        bernoulli(-1)
