# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Command(str, Enum):
    COMPUTE = "compute"
    POLY = "poly"
    TRANSFORM = "transform"
    INTERSECT = "intersect"
    VERIFY = "verify"
    TABLE = "table"


class Family(str, Enum):
    SIMPLE = "simple"
    PRUNED_SIMPLE = "pruned-simple"
    ORBIFOLD = "orbifold"
    PRUNED_ORBIFOLD = "pruned-orbifold"
    BELYI = "belyi"
    PRUNED_BELYI = "pruned-belyi"
    CYCLE = "cycle"
    GW = "gw"


class FactorizationVariant(str, Enum):
    SIMPLE = "simple"
    PRUNED_SIMPLE = "pruned-simple"
    ORBIFOLD = "orbifold"
    PRUNED_ORBIFOLD = "pruned-orbifold"
    CYCLE = "cycle"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class TransformDirection(str, Enum):
    PRUNED_TO_FULL = "pruned_to_full"
    FULL_TO_PRUNED = "full_to_pruned"


class FatgraphMode(str, Enum):
    ALL = "all"
    PRUNED = "pruned"
    VALENCE3PLUS = "valence3plus"


class GwRelation(str, Enum):
    ZERO = "zero"
    ONE = "one"


class OrbifoldRecursion(str, Enum):
    PRINTED = "printed"
    BALANCED = "balanced"


class OrbifoldIncidence(str, Enum):
    FACTOR = "factor"
    DEGREE = "degree"


class TableName(str, Enum):
    KHAT = "khat"
    Q = "q"
    GW = "gw"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    FINDING = "finding"


class RunRequest(BaseModel):
    """A fully parsed command line request."""

    command: Command
    family: Family | None = None
    a: int = Field(default=1, ge=1)
    g: int | None = Field(default=None, ge=0)
    mu: tuple[int, ...] | None = None
    n: int | None = Field(default=None, ge=1)
    d: tuple[int, ...] | None = None
    direction: TransformDirection = TransformDirection.PRUNED_TO_FULL
    which: TableName = TableName.KHAT
    suite: str = "all"
    extract: bool = False
    format: OutputFormat = OutputFormat.JSON
    cache_path: Path | None = None
    verify_cache: bool = False
    budget: int | None = Field(default=None, ge=0)
    workers: int | None = Field(default=None, ge=1)
    recursion: OrbifoldRecursion | None = None
    incidence: OrbifoldIncidence | None = None

    model_config = ConfigDict(frozen=True)

    @field_validator("mu")
    @classmethod
    def _positive_mu(cls, value: tuple[int, ...] | None) -> tuple[int, ...] | None:
        if value is not None and (not value or any(part < 1 for part in value)):
            raise ValueError("mu must be a non-empty tuple of positive integers")
        return value

    @field_validator("d")
    @classmethod
    def _non_negative_d(cls, value: tuple[int, ...] | None) -> tuple[int, ...] | None:
        if value is not None and (not value or any(part < 0 for part in value)):
            raise ValueError("d must be a non-empty tuple of non-negative integers")
        return value


class CacheRecord(BaseModel):
    """One JSON-lines record of the memo cache file."""

    variant: str
    a: int = Field(ge=1)
    g: int = Field(ge=0)
    mu: list[int]
    value: str


class BracketRecord(BaseModel):
    g: int
    d: list[int]
    # "lambda" is reserved in Python
    ell: int = Field(serialization_alias="lambda")
    value: str


class GraphRecord(BaseModel):
    X: int
    tau0: list[int]
    tau1: list[int]
    genus: int
    boundaries: list[list[int]]
    aut: int


class CheckResult(BaseModel):
    suite: str
    name: str
    status: CheckStatus
    detail: str = ""
