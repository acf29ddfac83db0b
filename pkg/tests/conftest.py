# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from typing import Generator

import pytest

from coreason_hurwitz import belyi, intersection, recursion
from coreason_hurwitz.arith import numbers


def _clear_all() -> None:
    recursion.PRUNED_CACHE.clear()
    recursion.clear_polynomials()
    intersection.WK_CACHE.clear()
    intersection.clear_polynomials()
    belyi.clear_cells()
    numbers.clear_tables()


@pytest.fixture(autouse=True)
def clear_memo_tables() -> Generator[None, None, None]:
    """
    Clears every process-wide memo table before and after each test,
    so no test observes values another test published.
    """
    _clear_all()
    yield
    _clear_all()
