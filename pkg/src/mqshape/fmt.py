"""Deterministic text output: 17-significant-digit floats, JSON, CSV.

All numeric output goes through float17 so repeated runs with identical
inputs produce byte-identical files and every printed double round-trips
exactly.
"""

import math
from fractions import Fraction

__all__ = ["float17", "dumps", "csv_lines"]


def float17(value):
    """Shortest-of-17-significant-digits decimal form of a double."""
    value = float(value)
    if math.isnan(value) or math.isinf(value):
        return repr(value)  # 'nan', 'inf', '-inf' (CSV only; JSON maps to null)
    return format(value, ".17g")


def _dump(obj, indent, level):
    pad = " " * (indent * level)
    pad_in = " " * (indent * (level + 1))
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        escaped = (
            obj.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\t", "\\t")
        )
        return f'"{escaped}"'
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return float17(float(obj))
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            return "null"
        return float17(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f'{pad_in}{_dump(str(k), indent, 0)}: {_dump(v, indent, level + 1)}'
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad_in}{_dump(v, indent, level + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent=2):
    """Serialize to JSON with float17 numbers and stable key order."""
    return _dump(obj, indent, 0) + "\n"


def dumps_compact(obj):
    """Single-line JSON used in CSV comment headers."""
    text = _dump(obj, 0, 0)
    return " ".join(line.strip() for line in text.splitlines())


def csv_lines(header, rows):
    """CSV text from a header list and iterable of cell lists.

    Floats go through float17, ints print bare, everything else via str.
    """
    def cell(v):
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, float):
            return float17(v)
        return str(v)

    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(cell(v) for v in row))
    return "\n".join(lines) + "\n"
