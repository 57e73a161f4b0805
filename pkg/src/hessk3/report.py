"""Check reports and the JSON report schema shared by every suite."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

STATUSES = ("pass", "fail", "finding", "skipped")


def jsonable(obj: Any):
    """Convert Fractions, tuples and friends into plain JSON data."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return round(obj, 12)
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, complex):
        return [round(obj.real, 12), round(obj.imag, 12)]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in obj]
        return sorted(items, key=repr) if isinstance(obj, (set, frozenset)) else items
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return str(obj)


@dataclass
class Entry:
    label: str
    status: str
    claim: str
    expected: Any = None
    computed: Any = None
    detail: Any = None

    @property
    def ok(self) -> bool:
        return self.status != "fail"


@dataclass
class CheckReport:
    """Outcome of one verification routine: a list of labelled entries."""

    name: str
    entries: list = field(default_factory=list)

    def add(self, label, ok: bool, claim: str, expected=None, computed=None, detail=None, status=None):
        status = status or ("pass" if ok else "fail")
        if status not in STATUSES:
            raise ValueError(status)
        self.entries.append(Entry(label, status, claim, expected, computed, detail))
        return self

    def finding(self, label, claim: str, expected=None, computed=None, detail=None):
        return self.add(label, True, claim, expected, computed, detail, status="finding")

    def skip(self, label, claim: str, detail=None):
        return self.add(label, True, claim, detail=detail, status="skipped")

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    def __getitem__(self, label) -> Entry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)

    def statuses(self) -> dict:
        return {e.label: e.status for e in self.entries}


@dataclass
class CheckResult:
    id: str
    status: str
    expected: Any
    computed: Any
    citation: str
    elapsed: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        d = {"id": self.id, "status": self.status, "citation": self.citation,
             "expected": jsonable(self.expected), "computed": jsonable(self.computed)}
        if timings:
            d["elapsed"] = round(self.elapsed, 4)
        return d


def results_from(suite: str, report: CheckReport, elapsed: float = 0.0) -> list[CheckResult]:
    out = []
    share = elapsed / max(len(report.entries), 1)
    for e in report.entries:
        computed = e.computed if e.detail is None else {"value": e.computed, "detail": e.detail}
        out.append(CheckResult(f"{suite}.{report.name}.{e.label}", e.status, e.expected,
                               computed, e.claim, share))
    return out


def summarize(results) -> dict:
    counts = {s: 0 for s in STATUSES}
    for r in results:
        counts[r.status] += 1
    return counts


def render_json(config: dict, results, timings: bool = False) -> str:
    doc = {"config": jsonable(config),
           "results": [r.to_json(timings) for r in sorted(results, key=lambda r: r.id)],
           "summary": summarize(results)}
    return json.dumps(doc, indent=2, sort_keys=False)


def render_text(results) -> str:
    rows = sorted(results, key=lambda r: r.id)
    width = max((len(r.id) for r in rows), default=10)
    lines = [f"{'check':<{width}}  {'status':<8}  {'time':>7}  claim"]
    for r in rows:
        lines.append(f"{r.id:<{width}}  {r.status:<8}  {r.elapsed:7.3f}  {r.citation}")
    s = summarize(rows)
    lines.append("")
    lines.append("  ".join(f"{k}={v}" for k, v in s.items()))
    return "\n".join(lines)
