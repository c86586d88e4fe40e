from __future__ import annotations

from dataclasses import dataclass, field
from typing import List


@dataclass
class ValidationReport:
    """Outcome of an exhaustive axiom check; violations are entries, not faults."""

    subject: str = ""
    violations: List[str] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> str | None:
        return self.violations[0] if self.violations else None

    def fail(self, message: str):
        self.violations.append(message)

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        self.violations.extend(other.violations)
        self.checked += other.checked
        return self

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"subject": self.subject, "ok": self.ok, "violations": list(self.violations)}
