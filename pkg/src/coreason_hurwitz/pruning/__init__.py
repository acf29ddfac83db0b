# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from coreason_hurwitz.pruning.forests import (
    enumerate_rooted_forests,
    forest_count,
    forest_count_orbifold,
    forest_identity,
    rooted_forest_count,
)
from coreason_hurwitz.pruning.providers import MappingProvider, ValueProvider
from coreason_hurwitz.pruning.transforms import transform_belyi, transform_orbifold, transform_simple

__all__ = [
    "MappingProvider",
    "ValueProvider",
    "enumerate_rooted_forests",
    "forest_count",
    "forest_count_orbifold",
    "forest_identity",
    "rooted_forest_count",
    "transform_belyi",
    "transform_orbifold",
    "transform_simple",
]
