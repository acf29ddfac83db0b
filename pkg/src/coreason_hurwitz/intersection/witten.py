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
Psi-class intersection numbers <tau_d1 ... tau_dn>_g by the recursion on d_1 (pivot rotated to
a maximal entry), seeded with <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.
"""

from collections.abc import Sequence
from fractions import Fraction

from coreason_hurwitz.arith.numbers import double_factorial
from coreason_hurwitz.exceptions import DomainError
from coreason_hurwitz.recursion.cache import MemoCache

WK_CACHE: MemoCache[tuple[int, tuple[int, ...]]] = MemoCache("witten-kontsevich")

_SEEDS = {(0, (0, 0, 0)): Fraction(1), (1, (1,)): Fraction(1, 24)}


def wk_intersection(g: int, d: Sequence[int]) -> Fraction:
    """Zero unless |d| = 3g-3+n with every d_i >= 0 and 2g-2+n > 0."""
    if g < 0:
        raise DomainError(f"Genus must be non-negative, got {g}")
    d = tuple(sorted(d, reverse=True))
    n = len(d)
    if n == 0 or any(di < 0 for di in d) or sum(d) != 3 * g - 3 + n or 2 * g - 2 + n <= 0:
        return Fraction(0)
    key = (g, d)
    if key in _SEEDS:
        return _SEEDS[key]
    cached = WK_CACHE.get(key)
    if cached is not None:
        return cached

    d1, rest = d[0], d[1:]
    norm = double_factorial(2 * d1 + 1)
    value = Fraction(0)
    for j, dj in enumerate(rest):
        others = rest[:j] + rest[j + 1 :]
        coef = Fraction(double_factorial(2 * d1 + 2 * dj - 1), norm * double_factorial(2 * dj - 1))
        value += coef * wk_intersection(g, others + (d1 + dj - 1,))
    for i in range(d1 - 1):
        j = d1 - 2 - i
        coef = Fraction(double_factorial(2 * i + 1) * double_factorial(2 * j + 1), 2 * norm)
        inner = wk_intersection(g - 1, (i, j) + rest) if g >= 1 else Fraction(0)
        for g1 in range(g + 1):
            for mask in range(1 << len(rest)):
                left = tuple(rest[k] for k in range(len(rest)) if mask >> k & 1)
                right = tuple(rest[k] for k in range(len(rest)) if not mask >> k & 1)
                first = wk_intersection(g1, (i,) + left)
                if first:
                    inner += first * wk_intersection(g - g1, (j,) + right)
        value += coef * inner
    return WK_CACHE.publish(key, value)


def string_closure(g: int, d: Sequence[int]) -> bool:
    """<tau_0 prod tau_dj>_g = sum_j <... tau_(dj-1) ...>_g."""
    d = tuple(d)
    rhs = sum(
        (wk_intersection(g, d[:j] + (d[j] - 1,) + d[j + 1 :]) for j in range(len(d)) if d[j] > 0),
        Fraction(0),
    )
    return wk_intersection(g, (0,) + d) == rhs


def dilaton_closure(g: int, d: Sequence[int]) -> bool:
    """<tau_1 prod tau_dj>_g = (2g-2+n) <prod tau_dj>_g."""
    d = tuple(d)
    return wk_intersection(g, (1,) + d) == (2 * g - 2 + len(d)) * wk_intersection(g, d)
