"""Pass/fail reports produced by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"


@dataclass
class Check:
    name: str
    status: str
    detail: Any = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def as_dict(self) -> Dict[str, Any]:
        out = {"name": self.name, "status": self.status}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    title: str
    checks: List[Check] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, ok: bool, detail: Any = None) -> Check:
        c = Check(name, PASS if ok else FAIL, None if ok else detail)
        self.checks.append(c)
        return c

    def add_na(self, name: str, reason: str) -> Check:
        c = Check(name, NA, reason)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: Optional[str] = None) -> None:
        for c in other.checks:
            name = c.name if prefix is None else "%s/%s" % (prefix, c.name)
            self.checks.append(Check(name, c.status, c.detail))

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def status(self, name: str) -> str:
        for c in self.checks:
            if c.name == name:
                return c.status
        raise KeyError(name)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.ok]

    def as_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
            "data": self.data,
        }

    def __str__(self) -> str:
        lines = ["%s: %s" % (self.title, "PASS" if self.passed else "FAIL")]
        for c in self.checks:
            lines.append("  [%s] %s%s" % (c.status, c.name, "" if c.detail is None else "  %s" % (c.detail,)))
        return "\n".join(lines)
