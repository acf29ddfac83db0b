# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from coreason_hurwitz.belyi.euler import harer_zagier_euler
from coreason_hurwitz.belyi.fatgraph import Fatgraph, FatgraphCount, enumerate_fatgraphs, perfect_matchings
from coreason_hurwitz.belyi.gw import (
    compare_N_P,
    gw_eval,
    gw_quasipolynomial_row,
    gw_relations_check,
    satisfies_triangle,
)
from coreason_hurwitz.belyi.lattice import (
    CellPolytope,
    clear_cells,
    euler_characteristic,
    lattice_count,
    lattice_quasipolynomial,
    valence_three_cells,
)

__all__ = [
    "CellPolytope",
    "Fatgraph",
    "FatgraphCount",
    "clear_cells",
    "compare_N_P",
    "enumerate_fatgraphs",
    "euler_characteristic",
    "gw_eval",
    "gw_quasipolynomial_row",
    "gw_relations_check",
    "harer_zagier_euler",
    "lattice_count",
    "lattice_quasipolynomial",
    "perfect_matchings",
    "satisfies_triangle",
    "valence_three_cells",
]
