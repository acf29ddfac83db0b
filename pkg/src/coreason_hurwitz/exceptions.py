# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from typing import Any


class HurwitzError(Exception):
    """Base exception for all engine errors."""

    exit_code = 1

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class BudgetExceededError(HurwitzError):
    """Raised when an enumeration would exceed the configured candidate budget."""

    exit_code = 2

    def __init__(self, message: str, estimate: int | None = None, budget: int | None = None) -> None:
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget


class DomainError(HurwitzError):
    """Raised for arguments outside the domain of an operation."""

    pass


class DependencyError(HurwitzError):
    """Raised when a value provider cannot supply a required key."""

    def __init__(self, message: str, key: Any = None) -> None:
        super().__init__(message)
        self.key = key


class InterpolationError(HurwitzError):
    """Raised for under-determined or inconsistent interpolation data."""

    pass


class UnsupportedError(HurwitzError):
    """Raised for requests outside the supported tables, suites or families."""

    pass
