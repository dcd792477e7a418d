from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    detail: Any = None
    gating: bool = True

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": bool(self.passed), "detail": self.detail}
        if not self.gating:
            out["informational"] = True
        return out


@dataclass
class Report:
    suite: str
    genus: int | None
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: Any = None, gating: bool = True) -> Check:
        c = Check(name, bool(passed), detail, gating)
        self.checks.append(c)
        return c

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail, c.gating))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.gating)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.gating and not c.passed]

    def to_json(self) -> dict:
        return {"suite": self.suite, "genus": self.genus, "pass": self.passed,
                "checks": [c.to_json() for c in self.checks]}

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            tag = "PASS" if c.passed else ("FAIL" if c.gating else "NOTE")
            lines.append(f"[{tag}] {c.name}" + (f": {c.detail}" if c.detail not in (None, "") else ""))
        return lines
