"""Machine-readable verification reports."""

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

class Report(BaseModel):
    """Outcome of one exhaustive check.

    Violations are recorded in enumeration order, which runs from small to
    large instances, so the first one is the smallest witness.
    """

    check: str
    passed: bool = True
    checked: int = 0
    violations: List[Dict[str, Any]] = []
    details: Dict[str, Any] = {}

    def fail(self, **witness: Any) -> None:
        self.passed = False
        self.violations.append(witness)

    @property
    def witness(self) -> Optional[Dict[str, Any]]:
        return self.violations[0] if self.violations else None

    def absorb(self, other: "Report", prefix: str = None) -> "Report":
        """Fold another report's counts and violations into this one."""
        self.checked += other.checked
        for violation in other.violations:
            entry = dict(violation)
            entry.setdefault("check", prefix or other.check)
            self.fail(**entry)
        return self

    def to_json(self) -> str:
        return json.dumps(self.dict(), sort_keys=True, indent=2)

class SuiteReport(BaseModel):
    """A collection of reports produced by one run."""

    seed: int
    window: List[int]
    reports: List[Report] = []

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def to_json(self) -> str:
        data = self.dict()
        data["passed"] = self.passed
        return json.dumps(data, sort_keys=True, indent=2)
