# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from coreason_hurwitz.recursion.cache import HurwitzKey, MemoCache, dump_cache, load_cache, read_records
from coreason_hurwitz.recursion.cut_and_join import (
    check_divisibility,
    symbolic_cut_and_join,
    symbolic_pruned_polynomial,
    verify_caj_simple,
)
from coreason_hurwitz.recursion.polynomials import (
    clear_polynomials,
    pruned_orbifold_quasipolynomial,
    pruned_simple_polynomial,
)
from coreason_hurwitz.recursion.pruned import (
    PRUNED_CACHE,
    oracle_unpruned_value,
    pruned_orbifold_value,
    pruned_simple_value,
    unpruned_simple_value,
)

__all__ = [
    "PRUNED_CACHE",
    "HurwitzKey",
    "MemoCache",
    "check_divisibility",
    "clear_polynomials",
    "dump_cache",
    "load_cache",
    "oracle_unpruned_value",
    "pruned_orbifold_quasipolynomial",
    "pruned_orbifold_value",
    "pruned_simple_polynomial",
    "pruned_simple_value",
    "read_records",
    "symbolic_cut_and_join",
    "symbolic_pruned_polynomial",
    "unpruned_simple_value",
    "verify_caj_simple",
]
