"""Structured outcome of a verification sweep."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exact import DensePoly, rational_str


def jsonable(value: Any) -> Any:
    """Recursively convert Fractions and polynomials to exact strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, DensePoly):
        return value.to_json_list()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    pairs_tested: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, **context: Any) -> bool:
        """Count one test case and store its context if it failed."""
        self.pairs_tested += 1
        if not ok:
            self.failures.append(context)
        return ok

    def merge(self, other: "VerificationReport") -> None:
        self.pairs_tested += other.pairs_tested
        self.failures.extend(other.failures)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "check": self.check,
            "params": jsonable(self.params),
            "pairs_tested": self.pairs_tested,
            "failures": jsonable(self.failures),
            "pass": self.passed,
        }
        if self.detail:
            out["detail"] = jsonable(self.detail)
        return out

    def to_json(self, **kwargs: Any) -> str:
        return json.dumps(self.to_dict(), **kwargs)
