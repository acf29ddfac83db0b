# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""Serializes command results as JSON, CSV or aligned text."""

import csv
import io
import json
from typing import Any

from pydantic import BaseModel

from coreason_hurwitz.schemas import OutputFormat

Row = dict[str, Any]


class Report(BaseModel):
    """Rows produced by one command; `single` reports render as one JSON object."""

    command: str
    rows: list[Row]
    single: bool = False


def _flatten(row: Row) -> Row:
    flat: Row = {}
    for key, value in row.items():
        if isinstance(value, list) and all(isinstance(v, (int, str)) for v in value):
            for index, item in enumerate(value, start=1):
                flat[f"{key}{index}"] = item
        elif isinstance(value, (list, dict)):
            flat[key] = json.dumps(value, separators=(",", ":"))
        else:
            flat[key] = value
    return flat


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_json(report: Report) -> str:
    payload: Any = report.rows[0] if report.single and len(report.rows) == 1 else report.rows
    return json.dumps(payload, separators=(",", ":"))


def render_csv(report: Report) -> str:
    rows = [_flatten(row) for row in report.rows]
    header: list[str] = []
    for row in rows:
        header.extend(key for key in row if key not in header)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(row[key]) if key in row else "" for key in header])
    return buffer.getvalue().rstrip("\n")


def render_text(report: Report) -> str:
    lines = []
    for row in report.rows:
        flat = _flatten(row)
        lines.append("  ".join(f"{key}={_cell(value)}" for key, value in flat.items()))
    return "\n".join(lines)


def render(report: Report, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.CSV:
        return render_csv(report)
    if fmt == OutputFormat.TEXT:
        return render_text(report)
    return render_json(report)
