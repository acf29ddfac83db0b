# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

# Expose package version
try:
    from importlib.metadata import version

    __version__ = version("coreason_hurwitz")
except Exception:  # pragma: no cover
    __version__ = "0.0.0"
