"""Read labeled prediction records from disk into confusion counts.

Two on-disk formats, both line-oriented:

* Delimited text with a header. Columns are ``z`` plus exactly one of
  ``a`` or ``score``, separated by a comma or a single tab (detected from
  the header). No quoting; surrounding whitespace is ignored.
* JSON lines. Each non-blank line is an object with key ``z`` plus
  exactly one of ``a`` or ``score``. Detected by a leading ``{``.

``z`` and ``a`` must be exactly 0 or 1 (probabilistic labels are
rejected); ``score`` must be a finite number and is thresholded into a
prediction via ``score > threshold``. Malformed rows raise a DataError
carrying the 1-based line number; rows are never skipped silently.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .errors import DataError, InvalidParameterError
from .estimation import ConfusionCounts

__all__ = ["ingest"]

MODES = ("auto", "prediction", "score")


def _parse_binary(raw: object, column: str, where: str) -> int:
    if isinstance(raw, str):
        raw = raw.strip()
        if raw in ("0", "1"):
            return int(raw)
    elif isinstance(raw, int) and not isinstance(raw, bool) and raw in (0, 1):
        return raw
    raise DataError(f"{where}: column {column!r} must be exactly 0 or 1, got {raw!r}")


def _parse_score(raw: object, where: str) -> float:
    if isinstance(raw, str):
        raw = raw.strip()
    try:
        value = float(raw)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        raise DataError(f"{where}: column 'score' must be a number, got {raw!r}") from None
    if isinstance(raw, bool) or not math.isfinite(value):
        raise DataError(f"{where}: column 'score' must be a finite number, got {raw!r}")
    return value


def _resolve_mode(requested: str, value_column: str, path: str) -> str:
    found = "prediction" if value_column == "a" else "score"
    if requested != "auto" and requested != found:
        raise DataError(
            f"{path}: file is in {found} mode (column {value_column!r}) "
            f"but {requested} mode was requested"
        )
    return found


def _iter_lines(path: str) -> list[tuple[int, str]]:
    try:
        text = Path(path).read_text(encoding="utf-8-sig")
    except FileNotFoundError:
        raise DataError(f"{path}: file not found") from None
    except OSError as exc:
        raise DataError(f"{path}: cannot read file: {exc}") from None
    rows = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1)]
    rows = [(i, line) for i, line in rows if line]
    if not rows:
        raise DataError(f"{path}: file is empty")
    return rows


def _json_record(line: str, where: str) -> dict:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise DataError(f"{where}: invalid JSON: {exc.msg}") from None
    if not isinstance(record, dict):
        raise DataError(f"{where}: expected a JSON object, got {type(record).__name__}")
    return record


def ingest(path: str, mode: str = "auto", threshold: float = 0.5) -> ConfusionCounts:
    """Parse a record file into exact confusion counts.

    mode is "auto" (infer from the file), "prediction" (require column
    ``a``), or "score" (require column ``score``); threshold only applies
    in score mode.
    """
    if mode not in MODES:
        raise InvalidParameterError(f"mode must be one of {MODES}, got {mode!r}")
    threshold = float(threshold)
    if not math.isfinite(threshold):
        raise InvalidParameterError(f"threshold must be finite, got {threshold!r}")
    rows = _iter_lines(path)

    if rows[0][1].startswith("{"):
        pairs = _ingest_jsonl(rows, mode, path)
    else:
        pairs = _ingest_delimited(rows, mode, path)

    tp = fn = fp = tn = 0
    for z, a, score in pairs:
        if a is None:
            a = 1 if score > threshold else 0  # type: ignore[operator]
        if z == 1:
            if a == 1:
                tp += 1
            else:
                fn += 1
        elif a == 1:
            fp += 1
        else:
            tn += 1
    return ConfusionCounts(tp, fn, fp, tn)


def _ingest_delimited(
    rows: list[tuple[int, str]], mode: str, path: str
) -> list[tuple[int, int | None, float | None]]:
    header_line_no, header = rows[0]
    delimiter = "\t" if "\t" in header else ","
    columns = [c.strip() for c in header.split(delimiter)]
    where = f"{path}:{header_line_no}"
    if "a" in columns and "score" in columns:
        raise DataError(f"{where}: header has both 'a' and 'score'; datasets must use one mode")
    expected = {"z", "a"} if "a" in columns else {"z", "score"}
    if set(columns) != expected or len(columns) != 2:
        raise DataError(
            f"{where}: header must be exactly columns 'z' and 'a' or 'z' and 'score', "
            f"got {columns!r}"
        )
    value_column = columns[0] if columns[0] != "z" else columns[1]
    resolved = _resolve_mode(mode, value_column, path)
    z_at = columns.index("z")

    if len(rows) == 1:
        raise DataError(f"{path}: no data rows after the header")
    out: list[tuple[int, int | None, float | None]] = []
    for line_no, line in rows[1:]:
        fields = [f.strip() for f in line.split(delimiter)]
        where = f"{path}:{line_no}"
        if len(fields) != 2:
            raise DataError(f"{where}: expected 2 fields, got {len(fields)}")
        z = _parse_binary(fields[z_at], "z", where)
        raw = fields[1 - z_at]
        if resolved == "prediction":
            out.append((z, _parse_binary(raw, "a", where), None))
        else:
            out.append((z, None, _parse_score(raw, where)))
    return out


def _ingest_jsonl(
    rows: list[tuple[int, str]], mode: str, path: str
) -> list[tuple[int, int | None, float | None]]:
    resolved: str | None = None
    out: list[tuple[int, int | None, float | None]] = []
    for line_no, line in rows:
        where = f"{path}:{line_no}"
        record = _json_record(line, where)
        keys = set(record)
        if "a" in keys and "score" in keys:
            raise DataError(f"{where}: record has both 'a' and 'score'; datasets must use one mode")
        if "z" not in keys or not keys <= {"z", "a", "score"} or len(keys) != 2:
            raise DataError(
                f"{where}: record must have key 'z' plus exactly one of 'a' or 'score', "
                f"got keys {sorted(keys)!r}"
            )
        value_key = "a" if "a" in keys else "score"
        if resolved is None:
            resolved = _resolve_mode(mode, value_key, path)
        elif ("prediction" if value_key == "a" else "score") != resolved:
            raise DataError(f"{where}: record switches to {value_key!r} mode mid-file")
        z = _parse_binary(record["z"], "z", where)
        if resolved == "prediction":
            out.append((z, _parse_binary(record["a"], "a", where), None))
        else:
            out.append((z, None, _parse_score(record["score"], where)))
    return out
