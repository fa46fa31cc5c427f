"""Structured pass/fail results for identity sweeps."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exact import Poly, format_rational


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Poly):
        return value.to_strings()
    return value


@dataclass(frozen=True)
class Counterexample:
    check: str
    params: dict
    residual: Poly

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "residual": self.residual.to_strings(),
        }

    def __str__(self) -> str:
        ps = ", ".join(f"{k}={_jsonable(v)}" for k, v in self.params.items())
        return f"{self.check} [{ps}]: residual = {self.residual}"


@dataclass
class VerifyReport:
    """Counts of passed checks plus every failing case with its residual."""

    name: str
    passed: int = 0
    failures: list[Counterexample] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.passed + len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Counterexample | None:
        return self.failures[0] if self.failures else None

    def check(self, check: str, residual: Poly, **params) -> bool:
        """Record one identity whose residual should be the zero polynomial."""
        if residual.is_zero():
            self.passed += 1
            return True
        self.failures.append(Counterexample(check, params, residual))
        return False

    def check_scalar(self, check: str, lhs, rhs, **params) -> bool:
        return self.check(check, Poly.const(Fraction(lhs) - Fraction(rhs)), **params)

    def extend(self, other: "VerifyReport") -> "VerifyReport":
        self.passed += other.passed
        self.failures.extend(other.failures)
        return self

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "passed": self.passed,
            "failed": len(self.failures),
            "failures": [f.to_dict() for f in self.failures],
        }

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} ({self.passed}/{self.total})"
