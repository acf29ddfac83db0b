# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

import hashlib
from fractions import Fraction
from pathlib import Path

import pytest

from coreason_hurwitz.arith import MultiPolynomial
from coreason_hurwitz.exceptions import DomainError, UnsupportedError
from coreason_hurwitz.tables import (
    TABLES_PATH,
    khat_table_polynomial,
    load_tables,
    q_table_polynomial,
)


def test_packaged_tables_load() -> None:
    tables = load_tables()
    assert tables.checksum_sha256 == hashlib.sha256(TABLES_PATH.read_bytes()).hexdigest()
    assert load_tables() is tables
    assert {(row.g, row.n) for row in tables.khat} >= {(0, 3), (0, 4), (0, 5), (1, 1), (1, 2)}


def test_khat_rows() -> None:
    assert khat_table_polynomial(0, 3) == MultiPolynomial.monomial((1, 1, 1))
    assert khat_table_polynomial(0, 4).evaluate((1, 1, 1, 1)) == 4
    with pytest.raises(UnsupportedError, match="No pruned table row"):
        khat_table_polynomial(3, 3)


def test_q_rows() -> None:
    assert q_table_polynomial(1) == MultiPolynomial.univariate([0, Fraction(1, 2), Fraction(1, 2)])
    assert q_table_polynomial(2).evaluate((2,)) == 7
    with pytest.raises(UnsupportedError, match="No q table row"):
        q_table_polynomial(99)


def test_gw_rows_missing() -> None:
    with pytest.raises(UnsupportedError):
        load_tables().gw_rows(7, 7)


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(DomainError, match="missing"):
        load_tables(tmp_path / "absent.yaml")


@pytest.mark.parametrize("content", ["khat: [", "- just a list", "khat: []\n"])
def test_invalid_file(tmp_path: Path, content: str) -> None:
    path = tmp_path / "tables.yaml"
    path.write_text(content)
    with pytest.raises(DomainError):
        load_tables(path)
