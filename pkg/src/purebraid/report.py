"""Verification reports shared by the identity, relation and dihedral checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .braid import BraidWord
from .garside import normal_form


@dataclass(frozen=True)
class ReportItem:
    id: str
    kind: str
    verdict: bool
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        out = {"id": self.id, "kind": self.kind, "verdict": "pass" if self.verdict else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    command: str
    ambient: int
    items: list[ReportItem] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.items)

    @property
    def passed(self) -> int:
        return sum(1 for it in self.items if it.verdict)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def counts_by_kind(self) -> dict[str, dict[str, int]]:
        counts: dict[str, dict[str, int]] = {}
        for it in self.items:
            c = counts.setdefault(it.kind, {"total": 0, "passed": 0, "failed": 0})
            c["total"] += 1
            c["passed" if it.verdict else "failed"] += 1
        return dict(sorted(counts.items()))

    def extend(self, items: Iterable[ReportItem]) -> VerificationReport:
        self.items.extend(items)
        return self

    def merge(self, other: VerificationReport) -> VerificationReport:
        return VerificationReport(self.command, max(self.ambient, other.ambient),
                                  self.items + other.items)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "ambient": self.ambient,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "by_kind": self.counts_by_kind(),
            "items": [it.to_json() for it in self.items],
        }

    def summary(self) -> str:
        status = "OK" if self.ok else "FAILED"
        return f"{self.command} (n={self.ambient}): {self.passed}/{self.total} passed [{status}]"


def check_equal(item_id: str, kind: str, lhs: BraidWord, rhs: BraidWord) -> ReportItem:
    """Compare two braid words; failures carry both normal forms as the witness."""
    nl, nr = normal_form(lhs), normal_form(rhs)
    if nl == nr:
        return ReportItem(item_id, kind, True)
    return ReportItem(item_id, kind, False, {
        "lhs": str(lhs), "rhs": str(rhs),
        "lhs_normal_form": nl.to_json(), "rhs_normal_form": nr.to_json(),
    })
