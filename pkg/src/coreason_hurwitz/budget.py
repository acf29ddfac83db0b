# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from loguru import logger

from coreason_hurwitz.config import settings
from coreason_hurwitz.exceptions import BudgetExceededError


def resolve_budget(budget: int | None) -> int:
    """Returns the explicit budget or the configured default."""
    return settings.ENUMERATION_BUDGET if budget is None else budget


def check_budget_guardrail(estimate: int, budget: int | None, label: str) -> bool:
    """
    Checks an enumeration estimate against the candidate budget.
    Raises BudgetExceededError instead of starting an enumeration that cannot finish.
    """
    if estimate < 0:
        raise ValueError("Estimate cannot be negative.")

    limit = resolve_budget(budget)
    if estimate > limit:
        logger.warning(f"Budget exceeded for {label}. Estimated candidates: {estimate}, limit: {limit}")
        raise BudgetExceededError(
            f"{label} needs {estimate} candidates, above the budget of {limit}",
            estimate=estimate,
            budget=limit,
        )
    return True
