"""Verification reports: one record per check with a stable field set."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, SKIP = "pass", "fail", "skipped"


@dataclass
class Check:
    check: str
    status: str
    expected: Any = None
    computed: Any = None
    certificate: Any = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def as_dict(self):
        return {
            "check": self.check,
            "status": self.status,
            "expected": _plain(self.expected),
            "computed": _plain(self.computed),
            "certificate": _plain(self.certificate),
        }


def _plain(v):
    if v is None or isinstance(v, (bool, int, float, str)):
        return v
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return str(v)


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def add(self, name, passed, expected=None, computed=None, certificate=None, status=None) -> Check:
        st = status or (PASS if passed else FAIL)
        c = Check(name, st, expected, computed, certificate)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.check, c.status, c.expected, c.computed, c.certificate))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def as_dict(self):
        return {"title": self.title, "status": PASS if self.ok else FAIL, "checks": [c.as_dict() for c in self.checks]}

    def to_structured(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"# {self.title}"]
        for c in self.checks:
            line = f"{c.status.upper():7s} {c.check}: computed={_short(c.computed)}"
            if c.expected is not None:
                line += f" expected={_short(c.expected)}"
            lines.append(line)
        lines.append(f"overall: {PASS if self.ok else FAIL}")
        return "\n".join(lines)


def _short(v, limit=120):
    s = json.dumps(_plain(v), sort_keys=True) if not isinstance(v, str) else v
    return s if len(s) <= limit else s[: limit - 3] + "..."
