"""Residual bookkeeping shared by the verification sweeps."""

from __future__ import annotations


class ResidualReport:
    """Outcome of one identity sweep: how many cases ran, which failed.

    Each failure keeps the witness label and the offending residual element
    so a nonzero result can be traced to a concrete input and h-order.
    """

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures: list = []

    def record(self, label: str, failed: bool, residual=None):
        self.checked += 1
        if failed:
            self.failures.append((label, residual))

    def merge(self, other: "ResidualReport"):
        self.checked += other.checked
        self.failures.extend(other.failures)

    def ok(self) -> bool:
        return not self.failures

    def witness(self):
        return self.failures[0] if self.failures else None

    def __repr__(self):
        status = "ok" if self.ok() else f"{len(self.failures)} failing"
        return f"<ResidualReport {self.name}: {self.checked} checked, {status}>"
