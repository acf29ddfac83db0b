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
from unittest import mock

import pytest

from coreason_hurwitz.belyi import compare_N_P, gw_eval, gw_quasipolynomial_row, gw_relations_check, satisfies_triangle
from coreason_hurwitz.exceptions import DomainError, UnsupportedError
from coreason_hurwitz.schemas import CheckStatus, GwRelation
from coreason_hurwitz.tables import load_tables
from coreason_hurwitz.verification import gw_closed_form, gw_row_points, suite_gw


@pytest.mark.parametrize(
    "g, mu, expected",
    [
        (0, (1, 1, 1), Fraction(1)),
        (0, (1, 1, 2), Fraction(0)),
        (0, (3, 5, 7), Fraction(1)),
        (1, (1,), Fraction(-1, 24)),
        (1, (3,), Fraction(1, 8)),
        (1, (2,), Fraction(0)),
        (0, (1, 1, 2, 2), Fraction(2)),
        (0, (2, 2, 2, 2), Fraction(4)),
        (0, (0, 1, 1, 2), Fraction(1)),
    ],
)
def test_gw_eval(g: int, mu: tuple[int, ...], expected: Fraction) -> None:
    assert gw_eval(g, mu) == expected


def test_gw_eval_errors() -> None:
    with pytest.raises(DomainError, match="non-negative"):
        gw_eval(0, (-1, 1, 1))
    with pytest.raises(UnsupportedError, match="No Gromov-Witten table row"):
        gw_eval(5, (1,))


def test_gw_quasipolynomial_row() -> None:
    quasi = gw_quasipolynomial_row(1, 1)
    assert quasi.modulus == 2
    assert set(quasi.branches) == {(1,)}
    assert quasi.evaluate((3,)) == Fraction(1, 8)
    assert quasi.evaluate((4,)) == 0


@pytest.mark.parametrize(
    "which, g, mu, expected",
    [
        (GwRelation.ZERO, 0, (1, 1, 2), CheckStatus.PASS),
        (GwRelation.ZERO, 1, (2,), CheckStatus.PASS),
        (GwRelation.ZERO, 0, (1, 1, 1), CheckStatus.SKIPPED),
        (GwRelation.ONE, 0, (1, 1, 1), CheckStatus.PASS),
    ],
)
def test_gw_relations(which: GwRelation, g: int, mu: tuple[int, ...], expected: CheckStatus) -> None:
    assert gw_relations_check(g, mu, which) == expected


def test_triangle_inequality() -> None:
    assert satisfies_triangle((2, 2, 1))
    assert satisfies_triangle((1, 1, 1))
    assert not satisfies_triangle((3, 1, 1))


def test_compare_N_P() -> None:
    """The genus-zero values agree with cycle Hurwitz numbers exactly inside the triangle."""
    assert compare_N_P((1, 1, 1))
    assert compare_N_P((2, 2, 1))
    assert compare_N_P((3, 3, 1))
    assert not compare_N_P((3, 1, 1))
    with pytest.raises(DomainError, match="odd sum"):
        compare_N_P((2, 2, 2))
    with pytest.raises(DomainError):
        compare_N_P((1, 2))


@pytest.mark.parametrize(
    "g, mu, expected",
    [
        (1, (3,), Fraction(1, 8)),
        (1, (5,), Fraction(11, 24)),
        (0, (1, 1, 2, 2), Fraction(2)),
        (0, (1, 1, 1, 1), Fraction(1)),
        (1, (2, 4), Fraction(5, 8)),
        (1, (1, 3), Fraction(1, 12)),
        (1, (2, 2), Fraction(0)),
        (2, (1,), Fraction(0)),
        (2, (3,), Fraction(7, 2880)),
        (0, (2, 2, 2), Fraction(0)),
        (0, (1, 2, 2), Fraction(1)),
        (1, (2,), Fraction(0)),
        (0, (1, 2, 2, 2), Fraction(0)),
        (1, (1, 2), Fraction(0)),
    ],
)
def test_gw_eval_hand_values(g: int, mu: tuple[int, ...], expected: Fraction) -> None:
    """Values worked out by hand from the printed rows, vanishing rows included."""
    assert gw_eval(g, mu) == expected
    assert gw_closed_form(g, mu) == expected


def test_gw_rows_sampled_by_parity() -> None:
    for row in load_tables().gw:
        points = gw_row_points(row)
        assert len(points) == 5
        for point in points:
            assert sum(part % 2 for part in point) in row.odd
            assert gw_eval(row.g, point) == gw_closed_form(row.g, point) == row.polynomial(row.n).evaluate(point)
            if row.scale == "0":
                assert gw_eval(row.g, point) == 0


def test_gw_suite_covers_every_row() -> None:
    with mock.patch("coreason_hurwitz.verification.compare_N_P", side_effect=lambda mu, budget: satisfies_triangle(mu)):
        results = suite_gw(None, None)
    rows = [result for result in results if result.name.startswith("row ")]
    assert len(rows) == 5 * len(load_tables().gw)
    assert all(result.status == CheckStatus.PASS for result in rows)
