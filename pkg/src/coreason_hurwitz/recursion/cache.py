# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""Shared memo cache for recursion values, with JSON-lines persistence."""

import json
import os
import tempfile
import threading
from collections.abc import Callable, Hashable, Sequence
from fractions import Fraction
from pathlib import Path
from typing import Generic, NamedTuple, TypeVar

from loguru import logger
from pydantic import ValidationError

from coreason_hurwitz.arith.polynomial import format_rational, parse_rational
from coreason_hurwitz.exceptions import DomainError
from coreason_hurwitz.schemas import CacheRecord

K = TypeVar("K", bound=Hashable)


class HurwitzKey(NamedTuple):
    variant: str
    a: int
    g: int
    mu: tuple[int, ...]

    @classmethod
    def canonical(cls, variant: str, a: int, g: int, mu: Sequence[int]) -> "HurwitzKey":
        return cls(variant, a, g, tuple(sorted(mu)))


class MemoCache(Generic[K]):
    """
    Thread-safe memo table.
    Lookups are lock-free dictionary reads; a finished value is published under the lock and
    the first published value wins, so racing recomputations are harmless.
    """

    def __init__(self, name: str) -> None:
        self.name = name
        self._values: dict[K, Fraction] = {}
        self._lock = threading.Lock()

    def get(self, key: K) -> Fraction | None:
        return self._values.get(key)

    def publish(self, key: K, value: Fraction) -> Fraction:
        with self._lock:
            return self._values.setdefault(key, value)

    def snapshot(self) -> dict[K, Fraction]:
        with self._lock:
            return dict(self._values)

    def clear(self) -> None:
        with self._lock:
            self._values.clear()

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: object) -> bool:
        return key in self._values


class CacheLoadReport(NamedTuple):
    loaded: int
    checked: int
    mismatches: list[tuple[HurwitzKey, Fraction, Fraction]]


def read_records(path: Path) -> list[tuple[HurwitzKey, Fraction]]:
    """Parses a JSON-lines cache file; a malformed line is a DomainError naming the line."""
    out = []
    with open(path, "r", encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                record = CacheRecord.model_validate_json(line)
                value = parse_rational(record.value)
            except (ValidationError, DomainError) as e:
                raise DomainError(f"Malformed cache record at {path}:{number}: {e}") from e
            out.append((HurwitzKey.canonical(record.variant, record.a, record.g, record.mu), value))
    return out


def load_cache(
    cache: MemoCache[HurwitzKey],
    path: Path,
    recompute: Callable[[HurwitzKey], Fraction] | None = None,
) -> CacheLoadReport:
    """
    Loads a cache file into `cache`. With `recompute` each record is first checked against a
    fresh computation; fresh values are published before file values, so a corrupted record
    never enters the cache.
    """
    if not path.exists():
        logger.info(f"Cache file {path} does not exist yet; starting empty.")
        return CacheLoadReport(0, 0, [])
    records = read_records(path)
    mismatches = []
    if recompute is not None:
        for key, stored in records:
            fresh = recompute(key)
            if fresh != stored:
                logger.error(f"Cache mismatch for {key}: stored {stored}, recomputed {fresh}")
                mismatches.append((key, stored, fresh))
    for key, stored in records:
        cache.publish(key, stored)
    logger.info(f"Loaded {len(records)} cache records from {path}")
    return CacheLoadReport(len(records), len(records) if recompute else 0, mismatches)


def dump_cache(cache: MemoCache[HurwitzKey], path: Path) -> int:
    """Writes the cache sorted by key, replacing the file atomically."""
    entries = sorted(cache.snapshot().items())
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            for key, value in entries:
                record = CacheRecord(
                    variant=key.variant, a=key.a, g=key.g, mu=list(key.mu), value=format_rational(value)
                )
                f.write(json.dumps(record.model_dump()) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.info(f"Wrote {len(entries)} cache records to {path}")
    return len(entries)
