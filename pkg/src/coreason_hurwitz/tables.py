# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""Packaged reference tables: pruned polynomials, q_d rows and the Gromov-Witten quasi-polynomials."""

import hashlib
import threading
from pathlib import Path

import yaml
from loguru import logger
from pydantic import BaseModel, ValidationError

from coreason_hurwitz.arith.polynomial import MultiPolynomial, monomial_symmetric, parse_rational
from coreason_hurwitz.exceptions import DomainError, UnsupportedError

TABLES_PATH = Path(__file__).with_name("tables.yaml")


class Term(BaseModel):
    m: list[int] = []
    c: str


class TableRow(BaseModel):
    scale: str
    factors: list[list[Term]]

    def polynomial(self, nvars: int) -> MultiPolynomial:
        result = MultiPolynomial.constant(parse_rational(self.scale), nvars)
        for factor in self.factors:
            total = MultiPolynomial.zero(nvars)
            for term in factor:
                total = total + monomial_symmetric(term.m, nvars) * parse_rational(term.c)
            result = result * total
        return result


class KhatRow(TableRow):
    g: int
    n: int


class QRow(TableRow):
    d: int


class GwRow(TableRow):
    g: int
    n: int
    odd: list[int]


class ReferenceTables(BaseModel):
    khat: list[KhatRow]
    q: list[QRow]
    gw: list[GwRow]
    checksum_sha256: str = ""

    def khat_row(self, g: int, n: int) -> KhatRow:
        for row in self.khat:
            if (row.g, row.n) == (g, n):
                return row
        raise UnsupportedError(f"No pruned table row for (g, n) = ({g}, {n})")

    def gw_rows(self, g: int, n: int) -> list[GwRow]:
        rows = [row for row in self.gw if (row.g, row.n) == (g, n)]
        if not rows:
            raise UnsupportedError(f"No Gromov-Witten table row for (g, n) = ({g}, {n})")
        return rows


_CACHE: dict[Path, ReferenceTables] = {}
_LOCK = threading.Lock()


def load_tables(path: Path | None = None) -> ReferenceTables:
    """Loads and validates the YAML tables, recording the SHA256 of the file."""
    path = path or TABLES_PATH
    cached = _CACHE.get(path)
    if cached is not None:
        return cached
    if not path.exists():
        raise DomainError(f"Reference table file {path} is missing")
    with open(path, "rb") as f:
        content = f.read()
    checksum = hashlib.sha256(content).hexdigest()
    try:
        data = yaml.safe_load(content)
        if not isinstance(data, dict):
            raise DomainError(f"Reference tables {path} must be a mapping")
        tables = ReferenceTables.model_validate({**data, "checksum_sha256": checksum})
    except (yaml.YAMLError, ValidationError) as e:
        raise DomainError(f"Failed to process reference tables {path}: {e}") from e
    logger.debug(f"Loaded reference tables {path} (sha256 {checksum[:12]})")
    with _LOCK:
        return _CACHE.setdefault(path, tables)


def khat_table_polynomial(g: int, n: int) -> MultiPolynomial:
    """The printed row times mu_1 ... mu_n, i.e. K^_{g,n} itself."""
    row = load_tables().khat_row(g, n)
    return row.polynomial(n) * MultiPolynomial.monomial((1,) * n)


def q_table_polynomial(d: int) -> MultiPolynomial:
    for row in load_tables().q:
        if row.d == d:
            return row.polynomial(1)
    raise UnsupportedError(f"No q table row for d = {d}")
