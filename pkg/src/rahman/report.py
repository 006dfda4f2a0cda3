"""Structured pass/fail reports shared by all verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Report", "Recorder"]


@dataclass
class Report:
    name: str
    status: str  # "pass" | "fail"
    checked: int
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        data = {"name": self.name, "status": self.status, "checked": self.checked}
        if self.first_failure is not None:
            data["first_failure"] = self.first_failure
        return data


@dataclass
class Recorder:
    """Counts checks and remembers the first failure."""

    name: str
    checked: int = 0
    first_failure: str | None = field(default=None)

    def check(self, condition: bool, describe) -> None:
        """Record one check; ``describe`` is a string or a thunk for one."""
        self.checked += 1
        if not condition and self.first_failure is None:
            self.first_failure = describe() if callable(describe) else describe

    def equal(self, left, right, context: str) -> None:
        self.check(
            left == right,
            lambda: f"{context}: {left!r} != {right!r}",
        )

    def report(self) -> Report:
        status = "pass" if self.first_failure is None else "fail"
        return Report(self.name, status, self.checked, self.first_failure)
