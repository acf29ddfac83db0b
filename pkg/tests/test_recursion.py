# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

import json
import math
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

import pytest

from coreason_hurwitz.arith import MultiPolynomial
from coreason_hurwitz.exceptions import DomainError, InterpolationError
from coreason_hurwitz.oracle import count_orbifold, count_simple, transposition_count
from coreason_hurwitz.recursion import (
    PRUNED_CACHE,
    HurwitzKey,
    MemoCache,
    check_divisibility,
    dump_cache,
    load_cache,
    oracle_unpruned_value,
    pruned_orbifold_quasipolynomial,
    pruned_orbifold_value,
    pruned_simple_polynomial,
    pruned_simple_value,
    read_records,
    symbolic_cut_and_join,
    symbolic_pruned_polynomial,
    unpruned_simple_value,
    verify_caj_simple,
)
from coreason_hurwitz.recursion.polynomials import degree_bound
from coreason_hurwitz.recursion.pruned import pruned_two_face
from coreason_hurwitz.schemas import OrbifoldIncidence, OrbifoldRecursion
from coreason_hurwitz.tables import khat_table_polynomial


@pytest.mark.parametrize(
    "g, mu, expected",
    [
        (0, (1,), Fraction(0)),
        (0, (1, 1), Fraction(1, 2)),
        (0, (2, 1), Fraction(1, 3)),
        (0, (1, 1, 1), Fraction(1)),
        (0, (2, 3, 4), Fraction(24)),
        (0, (1, 1, 1, 1), Fraction(4)),
        (1, (1,), Fraction(0)),
        (1, (2,), Fraction(1, 6)),
        (1, (3,), Fraction(5, 8)),
    ],
)
def test_pruned_simple_values(g: int, mu: tuple[int, ...], expected: Fraction) -> None:
    assert pruned_simple_value(g, mu) == expected


def test_pruned_values_are_symmetric_and_memoized() -> None:
    assert pruned_simple_value(0, (1, 2)) == pruned_simple_value(0, (2, 1))
    assert HurwitzKey.canonical("pruned-simple", 1, 0, (2, 1)) in PRUNED_CACHE
    assert pruned_two_face(1, 2) == pruned_two_face(2, 1) == Fraction(1, 3)


def test_pruned_value_validation() -> None:
    with pytest.raises(DomainError, match="Genus"):
        pruned_simple_value(-1, (1,))
    with pytest.raises(DomainError, match="non-empty"):
        pruned_simple_value(0, ())


def test_pruned_values_match_oracle() -> None:
    """K^ times m! is the pruned factorization count."""
    assert pruned_simple_value(0, (1, 1, 1)) * 24 == 24
    assert pruned_simple_value(1, (2,)) * 6 == 1


@pytest.mark.parametrize(
    "g, mu",
    [
        (0, (2, 1, 1)),
        (0, (2, 2, 1)),
        (0, (3, 1, 1)),
        (0, (1, 1, 1, 1)),
        (1, (2, 2)),
        (1, (3, 1)),
    ],
)
def test_recursion_on_three_point_base_matches_oracle(g: int, mu: tuple[int, ...]) -> None:
    """Everything built on K^_{0,3} = mu1 mu2 mu3 agrees with the pruned factorization count."""
    m = transposition_count(g, mu)
    assert pruned_simple_value(g, mu) == Fraction(count_simple(g, mu, pruned=True), math.factorial(m))


def test_three_point_base_values() -> None:
    assert pruned_simple_value(0, (2, 1, 1)) == 2
    assert pruned_simple_value(0, (5, 3, 3)) == 45
    assert pruned_simple_value(1, (2, 2)) == Fraction(17, 6)
    assert pruned_simple_value(1, (3, 1)) == Fraction(25, 8)


def test_orbifold_three_point_base_from_oracle() -> None:
    count = count_orbifold(2, 0, (2, 1, 1), pruned=True)
    assert pruned_orbifold_value(2, 0, (2, 1, 1)) == Fraction(count, math.factorial(3))
    assert HurwitzKey.canonical("pruned-orbifold", 2, 0, (1, 1, 2)) in PRUNED_CACHE


@pytest.mark.parametrize(
    "g, mu, expected",
    [
        (0, (1,), Fraction(1)),
        (0, (2,), Fraction(1)),
        (0, (3,), Fraction(3, 2)),
        (0, (2, 1), Fraction(4, 3)),
        (0, (1, 1, 1), Fraction(1)),
        (1, (2,), Fraction(1, 6)),
    ],
)
def test_unpruned_values(g: int, mu: tuple[int, ...], expected: Fraction) -> None:
    assert unpruned_simple_value(g, mu) == expected


def test_unpruned_recursion_matches_oracle() -> None:
    for g, mu in [(0, (2, 1)), (0, (2, 2)), (0, (1, 1, 2)), (1, (2,))]:
        assert unpruned_simple_value(g, mu) == oracle_unpruned_value(g, mu)


def test_orbifold_values() -> None:
    assert pruned_orbifold_value(1, 1, (2,)) == Fraction(1, 6)
    assert pruned_orbifold_value(2, 0, (1,)) == 0
    assert pruned_orbifold_value(2, 0, (2,)) == 0
    with pytest.raises(DomainError, match="a must be positive"):
        pruned_orbifold_value(0, 0, (1,))


def test_orbifold_incidence_conventions() -> None:
    """A factor moving both members of one colour is counted once or twice."""
    assert pruned_orbifold_value(2, 0, (1, 1), incidence=OrbifoldIncidence.FACTOR) == 0
    assert pruned_orbifold_value(2, 0, (1, 1), incidence=OrbifoldIncidence.DEGREE) == 1
    assert HurwitzKey.canonical("pruned-orbifold:printed:degree", 2, 0, (1, 1)) in PRUNED_CACHE


def test_simple_polynomials() -> None:
    assert pruned_simple_polynomial(0, 3) == MultiPolynomial.monomial((1, 1, 1))
    expected = MultiPolynomial.univariate([0, Fraction(-1, 24), Fraction(1, 48), Fraction(1, 48)])
    assert pruned_simple_polynomial(1, 1) == expected
    assert pruned_simple_polynomial(1, 1) == khat_table_polynomial(1, 1)
    quartic = pruned_simple_polynomial(0, 4, held_out=3)
    assert quartic.degree == 3
    assert quartic.evaluate((1, 1, 1, 1)) == 4
    assert quartic.is_symmetric()


def test_degree_bound() -> None:
    assert degree_bound(0, 3) == 3
    assert degree_bound(2, 1) == 9
    with pytest.raises(DomainError, match="not stable"):
        degree_bound(0, 2)


def test_held_out_mismatch_raises() -> None:
    """Values that are not a polynomial of the expected degree fail the held-out check."""

    def not_polynomial(g: int, mu: tuple[int, ...]) -> Fraction:
        return Fraction(sum(mu)) ** 10

    with patch("coreason_hurwitz.recursion.polynomials.pruned_simple_value", side_effect=not_polynomial):
        with pytest.raises(InterpolationError, match="interpolant gives"):
            pruned_simple_polynomial(0, 3, held_out=10, seed=7)


def test_orbifold_quasipolynomial_collapses() -> None:
    quasi = pruned_orbifold_quasipolynomial(1, 0, 3, held_out=2)
    assert quasi.modulus == 1
    assert quasi.branch((0, 0, 0)) == MultiPolynomial.monomial((1, 1, 1))
    assert quasi.evaluate((2, 3, 4)) == 24
    with pytest.raises(DomainError):
        pruned_orbifold_quasipolynomial(0, 0, 3)


def test_symbolic_cut_and_join() -> None:
    assert symbolic_pruned_polynomial(0, 4) == pruned_simple_polynomial(0, 4)
    assert check_divisibility(0, 4)
    assert check_divisibility(1, 2)
    with pytest.raises(DomainError, match="not a polynomial"):
        symbolic_cut_and_join(0, 3)


def test_unpruned_cut_and_join_identity() -> None:
    assert verify_caj_simple(0, (2, 1))
    assert verify_caj_simple(1, (2,))


# Memo cache persistence


def test_memo_cache_first_writer_wins() -> None:
    cache: MemoCache[str] = MemoCache("test")
    assert cache.publish("k", Fraction(1)) == 1
    assert cache.publish("k", Fraction(2)) == 1
    assert len(cache) == 1
    assert cache.snapshot() == {"k": Fraction(1)}
    cache.clear()
    assert cache.get("k") is None


def test_dump_and_load_round_trip(tmp_path: Path) -> None:
    path = tmp_path / "cache" / "memo.jsonl"
    pruned_simple_value(1, (2,))
    written = dump_cache(PRUNED_CACHE, path)
    assert written == len(PRUNED_CACHE)
    records = read_records(path)
    assert (HurwitzKey("pruned-simple", 1, 1, (2,)), Fraction(1, 6)) in records

    PRUNED_CACHE.clear()
    report = load_cache(PRUNED_CACHE, path, recompute=lambda key: pruned_simple_value(key.g, key.mu))
    assert report.loaded == written
    assert report.checked == written
    assert report.mismatches == []


def test_load_missing_file(tmp_path: Path) -> None:
    report = load_cache(PRUNED_CACHE, tmp_path / "absent.jsonl")
    assert report == (0, 0, [])


def test_malformed_cache_line(tmp_path: Path) -> None:
    path = tmp_path / "memo.jsonl"
    record = {"variant": "pruned-simple", "a": 1, "g": 0, "mu": [1, 1], "value": "0.5"}
    path.write_text("\n" + json.dumps(record) + "\n")
    with pytest.raises(DomainError, match="memo.jsonl:2"):
        read_records(path)


def test_corrupted_record_detected(tmp_path: Path) -> None:
    """A corrupted value is reported and never replaces the recomputed one."""
    path = tmp_path / "memo.jsonl"
    path.write_text(json.dumps({"variant": "pruned-simple", "a": 1, "g": 1, "mu": [2], "value": "1/2"}) + "\n")
    report = load_cache(PRUNED_CACHE, path, recompute=lambda key: pruned_simple_value(key.g, key.mu))
    key = HurwitzKey("pruned-simple", 1, 1, (2,))
    assert report.mismatches == [(key, Fraction(1, 2), Fraction(1, 6))]
    assert PRUNED_CACHE.get(key) == Fraction(1, 6)
