# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

import os
from pathlib import Path
from unittest import mock

from coreason_hurwitz.config import Settings


def test_settings_defaults() -> None:
    """Test default values of the engine settings."""
    # We instantiate a new Settings object to avoid global state from import
    settings = Settings()

    assert settings.ENUMERATION_BUDGET == 100_000_000
    assert settings.FATGRAPH_MAX_DARTS == 12
    assert settings.HELD_OUT_POINTS == 10
    assert settings.WORKERS == 1
    assert settings.CACHE_PATH is None
    assert settings.ORBIFOLD_RECURSION == "printed"
    assert settings.ORBIFOLD_INCIDENCE == "factor"
    assert settings.LOG_LEVEL == "WARNING"


def test_settings_env_override() -> None:
    """Test that environment variables override defaults."""
    env_vars = {
        "ENUMERATION_BUDGET": "5000",
        "WORKERS": "4",
        "CACHE_PATH": "/tmp/hurwitz.jsonl",
        "ORBIFOLD_RECURSION": "balanced",
        "LOG_LEVEL": "DEBUG",
    }

    with mock.patch.dict(os.environ, env_vars):
        settings = Settings()

        assert settings.ENUMERATION_BUDGET == 5000
        assert settings.WORKERS == 4
        assert settings.CACHE_PATH == Path("/tmp/hurwitz.jsonl")
        assert settings.ORBIFOLD_RECURSION == "balanced"
        assert settings.LOG_LEVEL == "DEBUG"
