"""Report models shared by the check functions, the verify harness and the CLI."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one structural check: a name, a verdict, and witnesses."""

    name: str
    passed: bool
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)


@dataclass
class VerifyResult:
    """One acceptance claim replayed: expected vs computed, pass/fail/skipped."""

    claim: str
    description: str
    expected: str
    computed: str
    status: str               # "pass" | "fail" | "skipped"
    reason: str = ""
    seconds: float = 0.0


_STATUS_ORDER = {"fail": 0, "pass": 1, "skipped": 2}
CSV_COLUMNS = ("claim", "status", "expected", "computed", "reason", "seconds")


def sort_results(results):
    """Failures first, then passes, then skips; stable within a status."""
    return sorted(results, key=lambda r: _STATUS_ORDER.get(r.status, 3))


def emit_report(results, fmt: str = "text") -> str:
    """Render verify results; field order is stable and no wall-clock
    timestamps are embedded, so outputs are byte-comparable up to the
    per-claim seconds fields."""
    rows = sort_results(results)
    if fmt == "json":
        payload = [{"claim": r.claim, "status": r.status, "description": r.description,
                    "expected": r.expected, "computed": r.computed, "reason": r.reason,
                    "seconds": round(r.seconds, 3)} for r in rows]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow([r.claim, r.status, r.expected, r.computed, r.reason,
                             f"{r.seconds:.3f}"])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        width = max([len(r.claim) for r in rows], default=8)
        for r in rows:
            mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[r.status]
            note = r.reason if r.status == "skipped" else f"expected {r.expected} | got {r.computed}"
            lines.append(f"{mark}  {r.claim:<{width}}  {note}  [{r.seconds:.2f}s]")
        counts = {s: sum(1 for r in rows if r.status == s) for s in ("pass", "fail", "skipped")}
        lines.append(f"total: {len(rows)}  pass: {counts['pass']}  "
                     f"fail: {counts['fail']}  skipped: {counts['skipped']}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
