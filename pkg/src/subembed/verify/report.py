"""Verification report record and helpers shared by the verifiers."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

from ..group import PermGroup
from ..perm import Permutation


def describe(H: PermGroup) -> dict[str, Any]:
    """JSON-friendly description of a subgroup: order and 1-indexed generators."""
    return {"order": H.order, "gens": ";".join(str(g) for g in H.generators) or "()"}


@dataclass
class VerificationReport:
    statement_id: str
    group_name: str
    prime: int | None = None
    instances_checked: int = 0
    holds: bool = True
    counterexample: dict[str, Any] | None = None
    notes: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    millis: float = 0.0

    @property
    def vacuous(self) -> bool:
        return self.holds and self.instances_checked == 0

    @property
    def status(self) -> str:
        if not self.holds:
            return "fails"
        return "vacuous" if self.vacuous else "holds"

    def fail(self, counterexample: dict[str, Any]) -> None:
        """Record the first counterexample; later ones are ignored."""
        if self.holds:
            self.holds = False
            self.counterexample = counterexample

    def to_record(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "statement_id": self.statement_id,
            "group": self.group_name,
            "prime": self.prime,
            "instances": self.instances_checked,
            "holds": self.holds,
            "vacuous": self.vacuous,
            "counterexample": self.counterexample,
            "notes": self.notes,
            "details": self.details,
        }
        if timing:
            out["millis"] = round(self.millis, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_record(timing), sort_keys=True, default=str)


class timed:
    """Context manager that stores elapsed milliseconds on a report."""

    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self) -> VerificationReport:
        self._start = time.perf_counter()
        return self.report

    def __exit__(self, *exc) -> None:
        self.report.millis = (time.perf_counter() - self._start) * 1000


def perm_str(g: Permutation | None) -> str | None:
    return None if g is None else str(g)
