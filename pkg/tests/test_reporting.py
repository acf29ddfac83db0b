# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

import json

from coreason_hurwitz.reporting import Report, render, render_csv, render_json, render_text
from coreason_hurwitz.schemas import OutputFormat


def test_render_json_single_is_an_object() -> None:
    report = Report(command="compute", rows=[{"value": "1/6", "m": "3", "K": "1"}], single=True)
    assert render_json(report) == '{"value":"1/6","m":"3","K":"1"}'


def test_render_json_many_rows_is_a_list() -> None:
    report = Report(command="intersect", rows=[{"g": 0, "value": "1"}, {"g": 1, "value": "1/24"}])
    assert json.loads(render_json(report)) == [{"g": 0, "value": "1"}, {"g": 1, "value": "1/24"}]


def test_render_json_single_flag_with_several_rows() -> None:
    report = Report(command="compute", rows=[{"a": 1}, {"a": 2}], single=True)
    assert render_json(report) == '[{"a":1},{"a":2}]'


def test_render_csv_flattens_and_unions_columns() -> None:
    report = Report(
        command="intersect",
        rows=[{"g": 0, "d": [1, 0], "ok": True}, {"g": 1, "extra": {"a": 1}}],
    )
    assert render_csv(report) == 'g,d1,d2,ok,extra\n0,1,0,true,\n1,,,,"{""a"":1}"'


def test_render_csv_empty_report() -> None:
    assert render_csv(Report(command="table", rows=[])) == ""


def test_render_text() -> None:
    report = Report(command="verify", rows=[{"g": 0, "d": [1, 0], "ok": False}, {"value": "1/2"}])
    assert render_text(report) == "g=0  d1=1  d2=0  ok=false\nvalue=1/2"


def test_render_dispatch() -> None:
    report = Report(command="compute", rows=[{"value": "1"}], single=True)
    assert render(report, OutputFormat.JSON) == '{"value":"1"}'
    assert render(report, OutputFormat.CSV) == "value\n1"
    assert render(report, OutputFormat.TEXT) == "value=1"
