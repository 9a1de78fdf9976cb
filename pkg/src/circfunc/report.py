from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    """Ordered list of named pass/fail checks."""

    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def extend(self, other: Report) -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __len__(self):
        return len(self.checks)

    def summary(self) -> str:
        n_fail = len(self.failures)
        return f"{self.title}: {len(self.checks) - n_fail}/{len(self.checks)} passed"

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }
