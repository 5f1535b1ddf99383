"""Check reports: named pass/fail entries plus informational findings.

A `check` entry asserts something and can fail the report; a `finding`
records an observation (for example a model bound that did not hold under
the realizability proxy) without failing it.  Serialized reports carry the
module side convention so numbers stay interpretable on their own.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .endo import MODULE_SIDE_NOTE


@dataclass
class ReportEntry:
    check: str
    instance: str
    expected: object
    got: object
    passed: bool
    severity: str = "check"
    data: Optional[dict] = None

    def to_json(self) -> dict:
        doc = {
            "check": self.check,
            "instance": self.instance,
            "expected": self.expected,
            "got": self.got,
            "pass": self.passed,
            "severity": self.severity,
        }
        if self.data:
            doc["data"] = self.data
        return doc


@dataclass
class Report:
    name: str
    entries: list = field(default_factory=list)

    def add(self, check: str, instance: str, expected, got,
            passed: Optional[bool] = None, data: Optional[dict] = None) -> ReportEntry:
        if passed is None:
            passed = expected == got
        e = ReportEntry(check, instance, expected, got, bool(passed), "check", data)
        self.entries.append(e)
        return e

    def finding(self, check: str, instance: str, expected, got,
                data: Optional[dict] = None) -> ReportEntry:
        e = ReportEntry(check, instance, expected, got, expected == got,
                        "finding", data)
        self.entries.append(e)
        return e

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries if e.severity == "check")

    @property
    def findings(self) -> list:
        return [e for e in self.entries if e.severity == "finding"]

    def failures(self) -> list:
        return [e for e in self.entries
                if e.severity == "check" and not e.passed]

    def extend(self, other: "Report") -> None:
        self.entries.extend(other.entries)

    def to_json(self) -> dict:
        return {
            "report": self.name,
            "ok": self.ok,
            "module_convention": MODULE_SIDE_NOTE,
            "entries": [e.to_json() for e in self.entries],
        }

    def summary(self) -> str:
        checks = [e for e in self.entries if e.severity == "check"]
        failed = len([e for e in checks if not e.passed])
        noted = len(self.findings)
        parts = [f"{self.name}: {len(checks) - failed}/{len(checks)} checks passed"]
        if noted:
            flagged = len([e for e in self.findings if not e.passed])
            parts.append(f"{noted} findings ({flagged} flagged)")
        return ", ".join(parts)
