# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Engine Configuration based on Pydantic Settings.
    Reads from environment variables.
    """

    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", case_sensitive=True, extra="ignore")

    # Enumeration guardrails
    ENUMERATION_BUDGET: int = 100_000_000  # candidate tuples
    FATGRAPH_MAX_DARTS: int = 12

    # Polynomial reconstruction
    HELD_OUT_POINTS: int = 10
    HELD_OUT_SEED: int = 20240611

    # Oracle parallelism (process workers, 1 = in-process)
    WORKERS: int = 1

    # Memo persistence (JSON lines)
    CACHE_PATH: Path | None = None

    # Orbifold conventions: "printed" | "balanced", "factor" | "degree"
    ORBIFOLD_RECURSION: str = "printed"
    ORBIFOLD_INCIDENCE: str = "factor"

    # Logging
    LOG_LEVEL: str = "WARNING"


# Global Settings Instance
settings = Settings()
