"""Verification reports: expected closed-form quantities against computed ones."""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from functions.walsh import WalshProfile


class Verdict(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"
    NOT_APPLICABLE = "NotApplicable"


def _plain(value: Any) -> Any:
    """JSON-friendly copy: enums by value, dict keys as strings, tuples as lists."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_plain(v) for v in value]
    if hasattr(value, "item"):
        return value.item()
    return value


@dataclass
class Expectation:
    """One claimed quantity. ``relation`` is ``==``, ``>=`` or ``in``."""

    quantity: str
    value: Any
    relation: str = "=="

    def holds(self, observed: Any) -> bool:
        if self.relation == "==":
            return observed == self.value
        if self.relation == ">=":
            return observed is not None and observed >= self.value
        if self.relation == "in":
            return observed in self.value
        raise ValueError(f"unknown relation {self.relation!r}")

    def to_dict(self) -> Dict:
        return {"quantity": self.quantity, "relation": self.relation, "value": _plain(self.value)}


@dataclass
class VerifyReport:
    target: str
    inputs: Dict[str, Any]
    expected: List[Expectation] = field(default_factory=list)
    observed: Dict[str, Any] = field(default_factory=dict)
    verdict: Optional[Verdict] = None
    reason: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    @classmethod
    def not_applicable(cls, target: str, inputs: Dict[str, Any], reason: str) -> "VerifyReport":
        return cls(target=target, inputs=inputs, verdict=Verdict.NOT_APPLICABLE, reason=reason)

    def expect(self, quantity: str, value: Any, relation: str = "==") -> None:
        self.expected.append(Expectation(quantity, value, relation))

    def observe(self, quantity: str, value: Any) -> None:
        self.observed[quantity] = value

    def failures(self) -> List[str]:
        return [
            e.quantity for e in self.expected
            if e.quantity not in self.observed or not e.holds(self.observed[e.quantity])
        ]

    def finalize(self) -> "VerifyReport":
        if self.verdict == Verdict.NOT_APPLICABLE:
            return self
        failed = self.failures()
        self.verdict = Verdict.FAIL if failed else Verdict.PASS
        if failed:
            self.reason = "mismatch: " + ", ".join(failed)
        return self

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def to_dict(self) -> Dict:
        return {
            "target": self.target,
            "inputs": _plain(self.inputs),
            "expected": [e.to_dict() for e in self.expected],
            "observed": _plain(self.observed),
            "verdict": self.verdict.value if self.verdict else None,
            "reason": self.reason,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def report_inputs(profile: WalshProfile) -> Dict[str, Any]:
    """(p, m, s, function, epsilon, balanced) header shared by every report."""
    return {
        "p": profile.p,
        "m": profile.m,
        "s": profile.s,
        "function": profile.f.label,
        "epsilon": profile.epsilon,
        "balanced": profile.balanced,
        "alpha": list(profile.ctx.alpha),
    }
