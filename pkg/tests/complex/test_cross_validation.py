# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""Independent computations of the same numbers must agree."""

import math
from fractions import Fraction

import pytest

from coreason_hurwitz.belyi import enumerate_fatgraphs, lattice_count
from coreason_hurwitz.intersection import extract_brackets, wk_intersection
from coreason_hurwitz.oracle import count_simple, transposition_count
from coreason_hurwitz.pruning import transform_simple
from coreason_hurwitz.recursion import (
    pruned_orbifold_value,
    pruned_simple_polynomial,
    pruned_simple_value,
    unpruned_simple_value,
)
from coreason_hurwitz.schemas import CheckStatus, FatgraphMode, TransformDirection
from coreason_hurwitz.verification import run_suite

SMALL = [
    (0, (1, 1, 1)),
    (0, (2, 1, 1)),
    (0, (3, 1)),
    (0, (2, 2)),
    (0, (1, 1, 1, 1)),
    (1, (2,)),
    (1, (1, 1)),
    (1, (3,)),
]


@pytest.mark.parametrize("g, mu", SMALL)
def test_oracle_matches_recursion(g: int, mu: tuple[int, ...]) -> None:
    m = transposition_count(g, mu)
    pruned = count_simple(g, mu, pruned=True)
    full = count_simple(g, mu, pruned=False)
    assert Fraction(pruned, math.factorial(m)) == pruned_simple_value(g, mu)
    assert Fraction(full, math.factorial(m)) == unpruned_simple_value(g, mu)


@pytest.mark.parametrize("g, mu", [(g, mu) for g, mu in SMALL if (g, len(mu)) != (0, 1)])
def test_pruning_transform_round_trip(g: int, mu: tuple[int, ...]) -> None:
    full = transform_simple(TransformDirection.PRUNED_TO_FULL, g, mu, pruned_simple_value)
    assert full == unpruned_simple_value(g, mu)
    pruned = transform_simple(TransformDirection.FULL_TO_PRUNED, g, mu, unpruned_simple_value)
    assert pruned == pruned_simple_value(g, mu)


@pytest.mark.parametrize("g, mu", [(0, (3, 2, 1)), (1, (2, 1)), (1, (3,)), (2, (2,))])
def test_orbifold_recursion_collapses_at_a_one(g: int, mu: tuple[int, ...]) -> None:
    assert pruned_orbifold_value(1, g, mu) == pruned_simple_value(g, mu)


def test_khat_rows_match_printed_table() -> None:
    results = run_suite("khat-table")
    assert len(results) == 6
    assert {r.status for r in results} == {CheckStatus.PASS}


@pytest.mark.parametrize("g, n", [(0, 4), (0, 5), (1, 2)])
def test_extracted_brackets_match_witten_kontsevich(g: int, n: int) -> None:
    brackets = extract_brackets(g, n, pruned_simple_polynomial(g, n))
    plain = {key: value for key, value in brackets.items() if not key.ell}
    assert plain
    for key, value in plain.items():
        assert value == wk_intersection(key.g, key.d)


@pytest.mark.parametrize("g, mu", [(1, (2,)), (1, (6,)), (0, (2, 1, 1)), (0, (4, 2, 2)), (0, (3, 3, 2))])
def test_lattice_count_matches_pruned_fatgraphs(g: int, mu: tuple[int, ...]) -> None:
    assert lattice_count(g, mu) == enumerate_fatgraphs(g, mu, FatgraphMode.PRUNED).count


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["oracle-vs-recursion", "pruning", "orbifold", "belyi", "intersection", "properties"])
def test_verification_suite_has_no_failures(suite: str) -> None:
    results = run_suite(suite)
    assert results
    failed = [r for r in results if r.status == CheckStatus.FAIL]
    assert failed == []
