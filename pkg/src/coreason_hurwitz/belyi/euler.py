# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""Orbifold Euler characteristic of M_{g,n} from Bernoulli numbers."""

import math
from fractions import Fraction

from coreason_hurwitz.arith.numbers import bernoulli
from coreason_hurwitz.exceptions import DomainError


def harer_zagier_euler(g: int, n: int) -> Fraction:
    if g < 0 or n < 0 or 2 * g - 2 + n <= 0:
        raise DomainError(f"(g, n) = ({g}, {n}) is not stable")
    sign = -1 if n % 2 else 1
    if g == 0:
        return Fraction(math.factorial(n - 3) * (-1 if (n - 3) % 2 else 1))
    if g == 1:
        return Fraction(sign * math.factorial(n - 1), 12)
    return bernoulli(2 * g) * math.factorial(2 * g + n - 3) / (math.factorial(2 * g - 2) * 2 * g) * sign
