# -*- coding: utf-8 -*-
"""
Output rendering. JSON is canonical: sorted keys, no floats, and integers
beyond 2^53 written as decimal strings.
"""

import io
import json
from enum import Enum
from typing import Any, Dict, List, Sequence

import pandas as pd

__all__ = ["JSON_SAFE_INT", "to_jsonable", "render_json", "render_table", "render_text", "flatten"]

JSON_SAFE_INT = 2 ** 53


def to_jsonable(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value if abs(value) <= JSON_SAFE_INT else str(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    raise TypeError("cannot serialize {!r}".format(value))


def render_json(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2) + "\n"


def flatten(record: Dict[str, Any]) -> Dict[str, Any]:
    """One table row: nested values become compact JSON cells."""
    row = {}
    for key, value in to_jsonable(record).items():
        if isinstance(value, (dict, list)):
            row[key] = json.dumps(value, sort_keys=True, separators=(",", ":"))
        else:
            row[key] = value
    return row


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_table(rows: List[Dict[str, Any]], columns: Sequence[str], fmt: str) -> str:
    """
    :param fmt: "csv" (header row first) or "md"
    """
    flat = [flatten(r) for r in rows]
    frame = pd.DataFrame([[_cell(r.get(c)) for c in columns] for r in flat], columns=list(columns), dtype=object)
    if fmt == "csv":
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()
    lines = ["| " + " | ".join(columns) + " |", "|" + "|".join("---" for _ in columns) + "|"]
    for record in frame.itertuples(index=False):
        lines.append("| " + " | ".join(record) + " |")
    return "\n".join(lines) + "\n"


def render_text(payload: Dict[str, Any]) -> str:
    lines = []
    for key, value in sorted(to_jsonable(payload).items()):
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True, separators=(", ", ": "))
        lines.append("{}: {}".format(key, _cell(value)))
    return "\n".join(lines) + "\n"
