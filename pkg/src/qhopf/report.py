"""Verification reports: checks, deterministic JSON/text output, and the
numeric cross-check of exact identities."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .scalar import evaluate

REPORT_VERSION = "1"
STATUSES = ("pass", "fail", "finding", "inconclusive")

# sample point for the numeric cross-check; t^2 = mu*nu holds there
NUMERIC_POINT = {"q": Fraction(3, 2), "p": Fraction(1, 3), "mu": Fraction(4),
                 "nu": Fraction(1), "t": Fraction(2)}


class Comparator:
    """Exact comparison of coefficient dicts that also re-evaluates both
    sides at NUMERIC_POINT.

    A numeric disagreement on an exactly equal pair, or agreement on an
    exactly unequal pair, points at a canonicalization bug and is recorded.
    """

    def __init__(self, point=None):
        self.point = dict(point or NUMERIC_POINT)
        self.compared = 0
        self.mismatches: list = []

    def _num(self, d: dict) -> dict:
        out = {}
        for k, v in d.items():
            x = evaluate(v, self.point)
            if x:
                out[k] = out.get(k, 0) + x
        return {k: v for k, v in out.items() if v}

    def equal(self, lhs: dict, rhs: dict, label=None) -> bool:
        exact = lhs == rhs
        self.compared += 1
        try:
            numeric = self._num(lhs) == self._num(rhs)
        except ZeroDivisionError:
            return exact
        if exact and not numeric:
            self.mismatches.append(str(label))
        return exact

    def scalar_equal(self, a, b, label=None) -> bool:
        return self.equal({0: a} if a else {}, {0: b} if b else {}, label)

    def summary(self) -> dict:
        return {"compared": self.compared, "numeric_mismatches": self.mismatches[:5],
                "numeric_ok": not self.mismatches}


@dataclass
class Check:
    id: str
    description: str
    statement: str
    status: str
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    def as_dict(self) -> dict:
        return {"id": self.id, "description": self.description, "statement": self.statement,
                "status": self.status, "data": _jsonable(self.data)}


@dataclass
class Report:
    scenario: str
    parameters: dict
    checks: list = field(default_factory=list)
    timing_ms: int = 0
    version: str = REPORT_VERSION

    def add(self, id, description, statement, status, **data) -> Check:
        if isinstance(status, bool):
            status = "pass" if status else "fail"
        c = Check(id, description, statement, status, data)
        self.checks.append(c)
        return c

    def summary(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary()["fail"] == 0

    def get(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def as_dict(self, timing: bool = True) -> dict:
        d = {"version": self.version, "scenario": self.scenario,
             "parameters": _jsonable(self.parameters),
             "checks": [c.as_dict() for c in self.checks],
             "summary": self.summary()}
        if timing:
            d["timing_ms"] = self.timing_ms
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"scenario {self.scenario}  " + " ".join(
            f"{k}={v}" for k, v in self.parameters.items())]
        for c in self.checks:
            lines.append(f"[{c.status:>12}] {c.id}: {c.description}  ({c.statement})")
        s = self.summary()
        lines.append(" ".join(f"{k}={v}" for k, v in s.items()) + f"  time={self.timing_ms}ms")
        return "\n".join(lines) + "\n"


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float)) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x)
    return str(x)


def emit_report(report: Report, fmt: str = "json", path: str | None = None) -> str:
    """Render and optionally write a report; returns the rendered text."""
    text = report.to_json() if fmt == "json" else report.to_text()
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
