"""Structured pass/fail records produced by the verifiers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Named boolean checks plus the first counterexample found.

    A check value of ``None`` means the check was skipped (for instance a
    size cap was hit); skipped checks do not make the report fail.
    """

    kind: str
    params: dict[str, Any]
    checks: dict[str, bool | None]
    counterexample: Any = None
    counterexample_check: str | None = None
    counts: dict[str, int] = field(default_factory=dict)
    skipped: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def fail(self, check: str, witness: Any) -> None:
        self.checks[check] = False
        if self.counterexample is None:
            self.counterexample = witness
            self.counterexample_check = check

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "kind": self.kind,
            "params": self.params,
            "passed": self.passed,
            "checks": self.checks,
            "counterexample": self.counterexample,
            "counterexample_check": self.counterexample_check,
            "counts": self.counts,
            "skipped": self.skipped,
        }
        if include_timing:
            out["seconds"] = round(self.seconds, 6)
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing))


class CertReport(VerificationReport):
    """Total-unimodularity certificate; same layout as :class:`VerificationReport`."""
