# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from coreason_hurwitz.intersection.brackets import BracketKey, bracket_records, divide_by_variables, extract_brackets
from coreason_hurwitz.intersection.qpoly import (
    clear_polynomials,
    composition_power_sum,
    p_double,
    p_single,
    q_polynomial,
    q_recurrences_hold,
)
from coreason_hurwitz.intersection.witten import WK_CACHE, dilaton_closure, string_closure, wk_intersection

__all__ = [
    "WK_CACHE",
    "BracketKey",
    "bracket_records",
    "clear_polynomials",
    "composition_power_sum",
    "dilaton_closure",
    "divide_by_variables",
    "extract_brackets",
    "p_double",
    "p_single",
    "q_polynomial",
    "q_recurrences_hold",
    "string_closure",
    "wk_intersection",
]
