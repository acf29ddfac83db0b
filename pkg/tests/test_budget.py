# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from unittest import mock

import pytest

from coreason_hurwitz.budget import check_budget_guardrail, resolve_budget
from coreason_hurwitz.exceptions import BudgetExceededError


def test_guardrail_within_budget() -> None:
    """Estimates at or below the limit pass."""
    assert check_budget_guardrail(10, 10, "test") is True
    assert check_budget_guardrail(0, 0, "test") is True


def test_guardrail_exceeded() -> None:
    """Estimates above the limit raise with the numbers attached."""
    with pytest.raises(BudgetExceededError, match="above the budget of 5") as info:
        check_budget_guardrail(6, 5, "fatgraphs")
    assert info.value.estimate == 6
    assert info.value.budget == 5


def test_guardrail_logs_warning() -> None:
    """A warning is logged before raising."""
    with mock.patch("coreason_hurwitz.budget.logger") as mock_logger:
        with pytest.raises(BudgetExceededError):
            check_budget_guardrail(2, 1, "oracle")
        mock_logger.warning.assert_called_once()


def test_negative_estimate() -> None:
    with pytest.raises(ValueError, match="negative"):
        check_budget_guardrail(-1, 5, "test")


def test_resolve_budget_default() -> None:
    """None falls back to the configured budget."""
    with mock.patch("coreason_hurwitz.budget.settings") as mock_settings:
        mock_settings.ENUMERATION_BUDGET = 42
        assert resolve_budget(None) == 42
        assert resolve_budget(7) == 7
        assert check_budget_guardrail(42, None, "test") is True
