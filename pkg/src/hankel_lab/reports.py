"""Verification reports and their pretty, JSON-lines and CSV renderings."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .checks import Check
from .exact_core import CapExceeded, fmt
from .gf2d import CoeffGrid
from .hankel import RationalMatrix
from .series import TruncatedSeries

FORMATS = ("pretty", "json", "csv")
CSV_HEADER = ("target", "params", "status", "lhs", "rhs", "elapsed_ms")


@dataclass(frozen=True)
class VerificationReport:
    target: str
    params: Mapping = field(default_factory=dict)
    status: str = "pass"
    lhs: str = ""
    rhs: str = ""
    elapsed_ms: float = 0.0
    detail: str = ""

    def row(self) -> dict:
        return {"target": self.target, "params": params_text(self.params), "status": self.status,
                "lhs": self.lhs, "rhs": self.rhs, "elapsed_ms": self.elapsed_ms}


def serialize(value) -> str:
    """Exact text for a value: p/q for rationals, space-joined coefficients for series."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return fmt(value)
    if isinstance(value, TruncatedSeries):
        return " ".join(fmt(c) for c in value.coeffs)
    if isinstance(value, CoeffGrid):
        return "; ".join(" ".join(fmt(v) for v in row) for row in value.rows)
    if isinstance(value, RationalMatrix):
        return "; ".join(" ".join(fmt(v) for v in row) for row in value.to_lists())
    if isinstance(value, (set, frozenset)):
        return f"set of {len(value)}"
    if isinstance(value, (list, tuple)):
        return " ".join(serialize(v) for v in value)
    return str(value)


def params_text(params: Mapping) -> str:
    return ";".join(f"{k}={serialize(v)}" for k, v in sorted(params.items()))


def report_from_checks(target: str, params: Mapping, checks: Iterable[Check], elapsed_ms: float) -> VerificationReport:
    """pass carries the last check's values; fail carries the first mismatch."""
    checks = list(checks)
    if not checks:
        return VerificationReport(target, dict(params), "skipped", "", "", elapsed_ms, "no checks ran")
    bad = next((c for c in checks if not c.ok), None)
    shown = bad or checks[-1]
    return VerificationReport(target, dict(params), "fail" if bad else "pass",
                              serialize(shown.lhs), serialize(shown.rhs), elapsed_ms,
                              f"{shown.label} ({len(checks)} checks)")


def run_target(target: str, params: Mapping, fn: Callable[[], Iterable[Check]]) -> VerificationReport:
    """Time ``fn``; a cap overflow becomes a skipped report."""
    start = time.perf_counter()
    try:
        checks = list(fn())
    except CapExceeded as exc:
        return VerificationReport(target, dict(params), "skipped", "", "", _ms(start), str(exc))
    return report_from_checks(target, params, checks, _ms(start))


def _ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000, 3)


def sort_reports(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    return sorted(reports, key=lambda r: (r.target, params_text(r.params)))


def render(reports: Iterable[VerificationReport], style: str = "pretty") -> str:
    reports = sort_reports(reports)
    if style == "json":
        return "".join(json.dumps(r.row()) + "\n" for r in reports)
    if style == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
        writer.writeheader()
        for r in reports:
            writer.writerow(r.row())
        return buf.getvalue()
    if style != "pretty":
        raise ValueError(f"unknown format {style!r}; expected one of {FORMATS}")
    lines = []
    for r in reports:
        head = f"{r.status.upper():7} {r.target}"
        if r.params:
            head += f" [{params_text(r.params)}]"
        lines.append(f"{head}  ({r.elapsed_ms} ms)")
        if r.detail:
            lines.append(f"        {r.detail}")
        if r.status == "fail":
            lines.append(f"        lhs = {r.lhs}")
            lines.append(f"        rhs = {r.rhs}")
    return "\n".join(lines) + ("\n" if lines else "")


def exit_code(reports: Iterable[VerificationReport]) -> int:
    return 1 if any(r.status == "fail" for r in reports) else 0
