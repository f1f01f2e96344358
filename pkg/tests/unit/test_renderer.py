import csv
import io
import json

import pytest

from finitemonkey.reporting.renderer import (
    render,
    render_csv,
    render_json,
    render_table,
)
from finitemonkey.support.exceptions import UsageError

ROWS = [
    {"phrase": "Me, we", "length": 5, "quoted": "4.6 seconds", "external": False},
    {"phrase": "Hamlet (full play)", "length": None, "quoted": "", "external": True},
]


def test_render_table_layout():
    output = render_table(ROWS, "Gallery", ("typing speed: 52 wpm",))
    lines = output.splitlines()

    assert lines[0] == "## Gallery"
    assert lines[2].startswith("| phrase ")
    assert set(lines[3]) == {"|", "-"}
    # columns are aligned
    assert len({len(line) for line in lines[2:6]}) == 1
    assert "| yes " in lines[5]
    assert lines[-1] == "- typing speed: 52 wpm"


def test_render_table_without_title():
    output = render_table([{"a": 1}])
    assert output.splitlines() == ["| a |", "|---|", "| 1 |"]


def test_render_csv_parses_back():
    output = render_csv(ROWS)
    parsed = list(csv.DictReader(io.StringIO(output)))

    assert parsed[0]["phrase"] == "Me, we"
    assert parsed[0]["length"] == "5"
    assert parsed[1]["length"] == ""
    assert not output.endswith("\n")


def test_render_json_array_and_single():
    assert json.loads(render_json(ROWS))[1]["length"] is None

    line = render_json([{"b": 1, "a": "×"}], single=True)
    assert "\n" not in line
    assert line == '{"a": "×", "b": 1}'

    with pytest.raises(ValueError):
        render_json(ROWS, single=True)


def test_render_dispatch():
    assert render(ROWS, "json") == render_json(ROWS)
    assert render(ROWS, "csv") == render_csv(ROWS)
    with pytest.raises(UsageError):
        render(ROWS, "xml")
