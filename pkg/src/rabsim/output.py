"""Deterministic CSV/JSON serialization and atomic file writes.

Identical inputs must serialize to identical bytes: no timestamps, '.'
decimal separator, no thousands separators, \\n line endings. CSV cells
round floats to a configurable number of significant digits (default 6);
JSON keeps full precision so round-tripping a report loses nothing.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile

__all__ = [
    "DEFAULT_SIG_DIGITS",
    "format_value",
    "rows_to_csv",
    "to_json",
    "write_text_atomic",
]

DEFAULT_SIG_DIGITS = 6


def format_value(value, digits: int = DEFAULT_SIG_DIGITS) -> str:
    """One CSV cell: floats at significant digits, None empty, rest as str."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return format(value, f".{digits}g")
    return str(value)


def rows_to_csv(headers: list[str], rows: list[dict], digits: int = DEFAULT_SIG_DIGITS) -> str:
    """Serialize dict rows under fixed headers; missing keys become empty cells."""
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow([format_value(row.get(h), digits) for h in headers])
    return buffer.getvalue()


def _jsonable(value):
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def to_json(payload) -> str:
    """Stable JSON text: 2-space indent, insertion key order, trailing newline.

    Non-finite floats are emitted as the strings "inf"/"-inf"/"nan" so the
    output stays standard JSON.
    """
    return json.dumps(_jsonable(payload), indent=2, allow_nan=False) + "\n"


def write_text_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temp file in the target directory plus rename.

    Readers never observe a half-written artifact, and a crash leaves any
    previous version intact.
    """
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    fd, temp_path = tempfile.mkstemp(dir=directory, prefix=".rabsim-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(temp_path, path)
    except BaseException:
        try:
            os.unlink(temp_path)
        except OSError:
            pass
        raise
