# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""Value providers: the sources a pruning transform draws from."""

from collections.abc import Mapping, Sequence
from fractions import Fraction
from typing import Protocol

from coreason_hurwitz.exceptions import DependencyError

ValueKey = tuple[int, tuple[int, ...]]


class ValueProvider(Protocol):
    def __call__(self, g: int, mu: tuple[int, ...], /) -> Fraction: ...


class MappingProvider:
    """
    Serves stored values keyed by (g, mu). Symmetric families are looked up on the sorted
    tuple. A missing key raises DependencyError naming it.
    """

    def __init__(self, values: Mapping[ValueKey, Fraction], name: str = "mapping", symmetric: bool = True) -> None:
        self.name = name
        self.symmetric = symmetric
        self._values = {self._key(g, mu): Fraction(v) for (g, mu), v in values.items()}

    def _key(self, g: int, mu: Sequence[int]) -> ValueKey:
        return (g, tuple(sorted(mu)) if self.symmetric else tuple(mu))

    def __call__(self, g: int, mu: tuple[int, ...], /) -> Fraction:
        key = self._key(g, mu)
        try:
            return self._values[key]
        except KeyError:
            raise DependencyError(f"{self.name} provider has no value for g={g}, mu={key[1]}", key=key) from None

    def __len__(self) -> int:
        return len(self._values)
