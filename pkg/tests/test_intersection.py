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

from coreason_hurwitz.arith import MultiPolynomial
from coreason_hurwitz.exceptions import DomainError, InterpolationError
from coreason_hurwitz.intersection import (
    WK_CACHE,
    BracketKey,
    bracket_records,
    composition_power_sum,
    dilaton_closure,
    divide_by_variables,
    extract_brackets,
    p_double,
    p_single,
    q_polynomial,
    q_recurrences_hold,
    string_closure,
    wk_intersection,
)
from coreason_hurwitz.recursion import pruned_simple_polynomial
from coreason_hurwitz.tables import q_table_polynomial


def test_q_polynomials() -> None:
    assert q_polynomial(0) == 1
    assert q_polynomial(1) == MultiPolynomial.univariate([0, Fraction(1, 2), Fraction(1, 2)])
    assert q_polynomial(2).evaluate((2,)) == 7
    assert q_polynomial(3).degree == 6
    for d in range(1, 4):
        assert q_polynomial(d) == q_table_polynomial(d)
    with pytest.raises(DomainError):
        q_polynomial(-1)


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_q_recurrences(d: int) -> None:
    assert q_recurrences_hold(d)


def test_summation_polynomials() -> None:
    assert p_single(0).degree == 3
    # alpha + beta = 3: 1*2 + 2*1
    assert p_single(0).evaluate((1, 1)) == 4
    assert p_double(0, 0).degree == 5
    assert p_double(0, 0).evaluate((2,)) == 1
    with pytest.raises(DomainError):
        p_single(-1)
    with pytest.raises(DomainError):
        p_double(0, -1)


def test_composition_power_sum() -> None:
    assert composition_power_sum((0,)) == 1
    assert composition_power_sum((1, 1)).evaluate((3,)) == 4
    assert composition_power_sum((0, 0, 0)).evaluate((5,)) == 6
    with pytest.raises(DomainError):
        composition_power_sum(())


@pytest.mark.parametrize(
    "g, d, expected",
    [
        (0, (0, 0, 0), Fraction(1)),
        (1, (1,), Fraction(1, 24)),
        (0, (1, 0, 0, 0), Fraction(1)),
        (0, (2, 0, 0, 0, 0), Fraction(1)),
        (1, (0, 2), Fraction(1, 24)),
        (1, (1, 1), Fraction(1, 24)),
        (2, (4,), Fraction(1, 1152)),
        (0, (1, 0, 0), Fraction(0)),
        (0, (0, 0), Fraction(0)),
    ],
)
def test_wk_intersection(g: int, d: tuple[int, ...], expected: Fraction) -> None:
    assert wk_intersection(g, d) == expected


def test_wk_memo_and_validation() -> None:
    wk_intersection(2, (4,))
    assert (2, (4,)) in WK_CACHE
    assert wk_intersection(1, (-1, 3)) == 0
    with pytest.raises(DomainError, match="Genus"):
        wk_intersection(-1, (0,))


def test_string_and_dilaton() -> None:
    assert string_closure(0, (1, 0, 0))
    assert string_closure(1, (1, 2))
    assert wk_intersection(1, (0, 1, 2)) == Fraction(1, 12)
    assert dilaton_closure(0, (0, 0, 0))
    assert dilaton_closure(1, (0, 2))


def test_extract_genus_zero() -> None:
    assert extract_brackets(0, 3, pruned_simple_polynomial(0, 3)) == {BracketKey(0, (0, 0, 0), 0): 1}
    quartic = extract_brackets(0, 4, pruned_simple_polynomial(0, 4))
    assert quartic == {
        BracketKey(0, (1, 0, 0, 0), 0): 1,
        BracketKey(0, (0, 1, 0, 0), 0): 1,
        BracketKey(0, (0, 0, 1, 0), 0): 1,
        BracketKey(0, (0, 0, 0, 1), 0): 1,
    }


def test_extract_genus_one_lambda_class() -> None:
    """The constant term of K^_{1,1} gives <tau_0 lambda_1>_1."""
    brackets = extract_brackets(1, 1, pruned_simple_polynomial(1, 1))
    assert brackets == {BracketKey(1, (1,), 0): Fraction(1, 24), BracketKey(1, (0,), 1): Fraction(1, 24)}
    assert brackets[BracketKey(1, (1,), 0)] == wk_intersection(1, (1,))


def test_bracket_records() -> None:
    records = bracket_records({BracketKey(2, (4,), 0): Fraction(1, 1152)})
    assert records[0].model_dump(by_alias=True) == {"g": 2, "d": [4], "lambda": 0, "value": "1/1152"}


def test_extraction_errors() -> None:
    x = MultiPolynomial.variable(0, 1)
    with pytest.raises(InterpolationError, match="not divisible"):
        divide_by_variables(x + 1)
    with pytest.raises(InterpolationError, match="expected 2"):
        extract_brackets(0, 2, x)
    with pytest.raises(InterpolationError, match="Odd degree"):
        extract_brackets(1, 1, x * x)
    with pytest.raises(InterpolationError, match="exceeds the dimension"):
        extract_brackets(0, 1, x * q_polynomial(1))
