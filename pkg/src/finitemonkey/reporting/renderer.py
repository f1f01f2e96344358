"""
Renderers for report rows: markdown-style table, CSV and JSON.
"""

import csv
import io
import json

from finitemonkey.support.exceptions import UsageError

FORMATS = ("table", "csv", "json")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _columns(rows: list[dict]) -> list[str]:
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns


def render_table(
    rows: list[dict], title: str | None = None, footnotes: tuple[str, ...] = ()
) -> str:
    """
    Render rows as an aligned markdown table.

    Returns:
        Markdown table string.
    """
    lines = []
    if title:
        lines.append(f"## {title}")
        lines.append("")

    columns = _columns(rows)
    cells = [[_cell(row.get(col)) for col in columns] for row in rows]
    widths = [
        max([len(col)] + [len(line[i]) for line in cells])
        for i, col in enumerate(columns)
    ]

    lines.append(
        "| " + " | ".join(c.ljust(w) for c, w in zip(columns, widths)) + " |"
    )
    lines.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
    for line in cells:
        lines.append(
            "| " + " | ".join(c.ljust(w) for c, w in zip(line, widths)) + " |"
        )

    if footnotes:
        lines.append("")
        for note in footnotes:
            lines.append(f"- {note}")

    return "\n".join(lines)


def render_csv(rows: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=_columns(rows), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: "" if v is None else v for key, v in row.items()})
    return buffer.getvalue().rstrip("\n")


def render_json(rows: list[dict], single: bool = False) -> str:
    """A JSON array, or one single-line object when ``single`` is set."""
    if single:
        if len(rows) != 1:
            raise ValueError("single-record JSON needs exactly one row")
        return json.dumps(rows[0], sort_keys=True, ensure_ascii=False)
    return json.dumps(rows, indent=2, ensure_ascii=False)


def render(
    rows: list[dict],
    fmt: str = "table",
    title: str | None = None,
    footnotes: tuple[str, ...] = (),
    single: bool = False,
) -> str:
    """Render rows in the requested output format."""
    if fmt == "table":
        return render_table(rows, title, footnotes)
    if fmt == "csv":
        return render_csv(rows)
    if fmt == "json":
        return render_json(rows, single)
    raise UsageError(f"unknown output format {fmt!r}; expected one of {FORMATS}")
