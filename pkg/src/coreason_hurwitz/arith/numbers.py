# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""Special integers: factorials, binomials, Eulerian, Stirling and Bernoulli numbers."""

import math
import threading
from collections.abc import Callable
from fractions import Fraction

from coreason_hurwitz.exceptions import DomainError


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative argument {n}")
    return math.factorial(n)


def double_factorial(n: int) -> int:
    """n!! with the conventions (-1)!! = 0!! = 1."""
    if n < -1:
        raise DomainError(f"double factorial of {n}")
    return math.prod(range(n, 0, -2))


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"binomial({n}, {k}) outside 0 <= k <= n")
    return math.comb(n, k)


def basic_combinatorics(kind: str, *args: int) -> int:
    """Dispatches factorial, double_factorial and binomial by name."""
    if kind == "factorial":
        return factorial(*args)
    if kind == "double_factorial":
        return double_factorial(*args)
    if kind == "binomial":
        return binomial(*args)
    raise DomainError(f"Unknown combinatorial kind: {kind}")


RowRule = Callable[[int, list[int]], list[int]]


class _TriangleTable:
    """
    Row-extended triangle of integers.
    Rows are built from the previous row and published whole under a lock, so readers
    never see a partially filled row.
    """

    def __init__(self, next_row: RowRule) -> None:
        self._rows: list[list[int]] = [[1]]
        self._next_row = next_row
        self._lock = threading.Lock()

    def row(self, n: int) -> list[int]:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self._rows) <= n:
                self._rows.append(self._next_row(len(self._rows), self._rows[-1]))
            return self._rows[n]

    def clear(self) -> None:
        with self._lock:
            self._rows = [[1]]


def _eulerian_row(m: int, prev: list[int]) -> list[int]:
    # A(m,k) = (k+1) A(m-1,k) + (m-k) A(m-1,k-1)
    row: list[int] = []
    for k in range(m):
        left = prev[k] if k < len(prev) else 0
        right = prev[k - 1] if k >= 1 else 0
        row.append((k + 1) * left + (m - k) * right)
    return row


def _stirling_row(n: int, prev: list[int]) -> list[int]:
    # S(n,k) = k S(n-1,k) + S(n-1,k-1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        same = prev[k] if k < len(prev) else 0
        row[k] = k * same + prev[k - 1]
    return row


_EULERIAN = _TriangleTable(_eulerian_row)
_STIRLING = _TriangleTable(_stirling_row)


def eulerian(m: int, k: int) -> int:
    """Number of permutations of {1..m} with exactly k ascents; 0 outside 0 <= k <= m-1."""
    if m < 0 or k < 0:
        return 0
    if m == 0:
        return 1 if k == 0 else 0
    row = _EULERIAN.row(m)
    return row[k] if k < len(row) else 0


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _STIRLING.row(n)[k]


_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise DomainError(f"Bernoulli index {n} is negative")
    if n < len(_BERNOULLI):
        return _BERNOULLI[n]
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI) <= n:
            m = len(_BERNOULLI)
            # sum_{k=0}^{m} C(m+1,k) B_k = 0
            acc = sum((math.comb(m + 1, k) * _BERNOULLI[k] for k in range(m)), Fraction(0))
            _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


def clear_tables() -> None:
    """Drops the memo tables (used by tests)."""
    _EULERIAN.clear()
    _STIRLING.clear()
