"""Pass/fail reports shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field

from .series import first_difference


@dataclass
class Check:
    """Outcome of one named identity or invariant check."""

    name: str
    passed: bool
    first_failure_order: int | None = None
    detail: str = ""


@dataclass
class Report:
    """A bundle of checks; ok means every one of them passed."""

    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def add(self, name, passed, first_failure_order=None, detail=""):
        self.checks.append(Check(name, bool(passed), first_failure_order, detail))

    def add_series_equal(self, name, f, g, detail=""):
        """Record whether two series agree, with the first bad t-power."""
        n = first_difference(f, g)
        self.checks.append(Check(name, n is None, n, detail))

    def extend(self, other):
        self.checks.extend(other.checks)

    def __str__(self):
        lines = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            where = (
                "" if c.first_failure_order is None
                else f" (first failure at t^{c.first_failure_order})"
            )
            detail = f" -- {c.detail}" if c.detail else ""
            lines.append(f"[{status}] {c.name}{where}{detail}")
        return "\n".join(lines)
