"""Deterministic text serialization for exports.

Numbers are rendered with 12 significant digits (round-half-even, the
IEEE default), so regenerating an export with identical inputs yields
byte-identical files on any platform.  Non-finite floats map to null;
they never appear in well-formed exports.
"""

from __future__ import annotations

import json
import math


def fmt_number(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    value = float(value)
    if not math.isfinite(value):
        return "null"
    return format(value, ".12g")


def _is_scalar(value) -> bool:
    return value is None or isinstance(value, (bool, int, float, str))


def _write(value, lines: list, indent: int) -> None:
    pad = "  " * indent
    if value is None:
        lines.append("null")
    elif isinstance(value, str):
        lines.append(json.dumps(value))
    elif isinstance(value, (bool, int, float)):
        lines.append(fmt_number(value))
    elif isinstance(value, dict):
        if not value:
            lines.append("{}")
            return
        lines.append("{\n")
        for i, (key, item) in enumerate(value.items()):
            lines.append(f"{pad}  {json.dumps(str(key))}: ")
            _write(item, lines, indent + 1)
            lines.append(",\n" if i < len(value) - 1 else "\n")
        lines.append(f"{pad}}}")
    elif isinstance(value, (list, tuple)):
        items = list(value)
        if not items:
            lines.append("[]")
            return
        if all(_is_scalar(item) for item in items):
            body = ", ".join(
                json.dumps(item)
                if isinstance(item, str)
                else "null"
                if item is None
                else fmt_number(item)
                for item in items
            )
            lines.append(f"[{body}]")
            return
        lines.append("[\n")
        for i, item in enumerate(items):
            lines.append(f"{pad}  ")
            _write(item, lines, indent + 1)
            lines.append(",\n" if i < len(items) - 1 else "\n")
        lines.append(f"{pad}]")
    else:
        raise TypeError(f"cannot serialize {type(value)!r}")


def json_dumps(value) -> str:
    """Stable JSON text: fixed key order, 12-significant-digit numbers."""
    lines: list = []
    _write(value, lines, 0)
    lines.append("\n")
    return "".join(lines)


def csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, (int, float)):
        return fmt_number(value)
    return str(value)


def csv_dumps(header: list[str], rows) -> str:
    """CSV text with a fixed header and LF line endings."""
    out = [",".join(header)]
    for row in rows:
        out.append(",".join(csv_cell(cell) for cell in row))
    return "\n".join(out) + "\n"
