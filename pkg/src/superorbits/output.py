"""Rendering of row tables and documents as JSON, CSV or markdown."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Sequence

FORMATS = ("json", "csv", "markdown")


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, dict):
        return json.dumps(value, ensure_ascii=False, separators=(",", ":"))
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_cell(v) for v in value) + ")"
    return str(value)


def render_rows(rows: Sequence[dict], columns: Sequence[str], fmt: str, document: dict | None = None) -> str:
    """Render a row table. JSON wraps the rows in ``document`` under "rows"."""
    if fmt == "json":
        doc = dict(document or {})
        doc["rows"] = [{c: row.get(c) for c in columns} for row in rows]
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row.get(c)) for c in columns])
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(columns) + " |", "|" + "|".join(" --- " for _ in columns) + "|"]
        for row in rows:
            lines.append("| " + " | ".join(_cell(row.get(c)).replace("|", "\\|") for c in columns) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def render_mapping(doc: dict, fmt: str) -> str:
    """Render a flat key/value document (nested values are shown inline)."""
    if fmt == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    rows = [{"field": k, "value": v} for k, v in doc.items()]
    return render_rows(rows, ["field", "value"], fmt)


def load_schema(name: str) -> dict:
    """A shipped JSON schema by stem, e.g. ``load_schema("verification_report")``."""
    from importlib.resources import files

    return json.loads((files("superorbits") / "schemas" / f"{name}.schema.json").read_text(encoding="utf-8"))
