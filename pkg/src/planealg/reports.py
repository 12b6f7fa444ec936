"""Structured pass/fail records used by every verification sweep.

A failing check always carries a concrete witness so that reports can
explain *why* an input breaks a property, not just that it does.
"""

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: dict[str, Any] | None = None) -> Check:
        if not passed and witness is None:
            raise ValueError(f"failing check {name!r} requires a witness")
        check = Check(name, passed, None if passed else witness)
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        failed = len(self.failures())
        return {
            "checks": [c.to_dict() for c in self.checks],
            "totals": {"passed": len(self.checks) - failed, "failed": failed},
        }
