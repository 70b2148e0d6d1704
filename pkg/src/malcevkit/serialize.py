"""Exact-arithmetic-safe conversion of report payloads to JSON values.

Rationals are rendered as lowest-terms strings so reports never pass
through floating point; tuples become lists; nested containers recurse.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import CheckReport
from .linalg import format_rational

__all__ = ["jsonable", "report_jsonable"]


def jsonable(value):
    """Recursively convert a report payload into JSON-encodable values."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, float):
        raise TypeError("reports must stay in exact arithmetic; got a float")
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, CheckReport):
        return report_jsonable(value)
    raise TypeError(f"cannot convert {type(value).__name__} to JSON")


def report_jsonable(report: CheckReport) -> dict:
    out = {"ok": report.ok}
    if report.witness is not None:
        out["witness"] = jsonable(report.witness)
    if report.checks:
        out["checks"] = jsonable(report.checks)
    return out
