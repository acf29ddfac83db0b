# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from coreason_hurwitz.oracle.factorizations import (
    FactorizationProblem,
    count_cycle,
    count_orbifold,
    count_simple,
    hurwitz_genus_zero,
    transposition_count,
)
from coreason_hurwitz.oracle.permutation import Permutation, orbits, representative
from coreason_hurwitz.oracle.union_find import UnionFind, find_orbits, transitive

__all__ = [
    "FactorizationProblem",
    "Permutation",
    "UnionFind",
    "count_cycle",
    "count_orbifold",
    "count_simple",
    "find_orbits",
    "hurwitz_genus_zero",
    "orbits",
    "representative",
    "transitive",
    "transposition_count",
]
