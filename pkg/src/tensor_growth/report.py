"""Row serialization for the command line: CSV with a header, or a JSON array of objects.

Integers outside the signed 64-bit range are written to JSON as decimal strings
so that they round-trip exactly through any JSON reader.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from typing import Any, Sequence

INT64_MAX = 2 ** 63 - 1
INT64_MIN = -(2 ** 63)

_SIX = Decimal("0.000001")


def round6(x: Decimal) -> Decimal:
    return x.quantize(_SIX, rounding=ROUND_HALF_EVEN)


def nth_root_6(b: int, n: int) -> Decimal | None:
    """``b^(1/n)`` rounded half-even to 6 places; None for n = 0."""
    if n == 0:
        return None
    if b <= 0:
        return round6(Decimal(0))
    with localcontext() as ctx:
        ctx.prec = 40
        root = (Decimal(b).ln() / n).exp()
        return round6(root)


def _json_value(v: Any) -> Any:
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return v if INT64_MIN <= v <= INT64_MAX else str(v)
    if isinstance(v, Decimal):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if isinstance(v, dict):
        return {k: _json_value(x) for k, x in v.items()}
    return v


def _csv_value(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return " ".join(_csv_value(x) for x in v)
    return str(v)


def emit_report(rows: Sequence[dict[str, Any]], fmt: str, columns: Sequence[str]) -> str:
    """Render ``rows`` (dicts keyed by ``columns``) as CSV or JSON text."""
    if fmt == "json":
        return json.dumps([{c: _json_value(r.get(c)) for c in columns} for r in rows], indent=1) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_csv_value(r.get(c)) for c in columns])
    return buf.getvalue()
