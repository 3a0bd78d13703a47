"""Check records and reports produced by the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .scalars import CQ

__all__ = ["CheckRecord", "Report", "compare", "PASS", "DISCREPANCY", "MISMATCH", "ERROR"]

PASS = "pass"
DISCREPANCY = "exact-discrepancy"
MISMATCH = "mismatch"
ERROR = "error"


def _is_zero(x) -> bool:
    if hasattr(x, "is_zero"):
        return x.is_zero()
    return not x


def _scalar_ratio(lhs, rhs) -> CQ | None:
    """Exact scalar ``c`` with ``lhs == c * rhs``, if there is one."""
    if _is_zero(rhs):
        return None
    probe = _first_coefficient(rhs)
    target = _coefficient_like(lhs, rhs)
    if probe is None or target is None:
        return None
    c = target / probe
    if not c:
        return None
    return c if lhs == rhs.scale(c) else None


def _first_coefficient(x):
    from .grassmann import GrassmannElement, PhasedElement

    if isinstance(x, GrassmannElement):
        if not x.terms:
            return None
        return x.terms[min(x.terms)]
    if isinstance(x, PhasedElement):
        phi = min(x.parts)
        return _first_coefficient(x.parts[phi])
    if hasattr(x, "first_coefficient"):
        return x.first_coefficient()
    return None


def _coefficient_like(lhs, rhs):
    from .grassmann import GrassmannElement, PhasedElement

    if isinstance(rhs, GrassmannElement) and isinstance(lhs, GrassmannElement):
        return lhs.terms.get(min(rhs.terms), CQ(0))
    if isinstance(rhs, PhasedElement) and isinstance(lhs, PhasedElement):
        phi = min(rhs.parts)
        g = rhs.parts[phi]
        return lhs.part(phi).terms.get(min(g.terms), CQ(0))
    if hasattr(rhs, "coefficient_like"):
        return rhs.coefficient_like(lhs)
    return None


def compare(lhs, rhs, *, units: Sequence[Any] = ()):
    """Return ``(verdict, factor)`` for a claimed identity ``lhs == rhs``.

    ``factor`` is the exact scalar (or one of the supplied ``units``) with
    ``lhs == factor * rhs`` when the two sides differ by such a constant.
    """
    if lhs == rhs:
        return PASS, None
    c = _scalar_ratio(lhs, rhs)
    if c is not None:
        return DISCREPANCY, c
    for u in units:
        if lhs == u * rhs:
            return DISCREPANCY, u
    return MISMATCH, None


def _render(x) -> Any:
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [_render(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _render(v) for k, v in x.items()}
    return str(x)


@dataclass
class CheckRecord:
    name: str
    paper_ref: str
    inputs: Any
    lhs: Any
    rhs: Any
    verdict: str
    discrepancy_factor: Any = None
    note: str = ""

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "paper_ref": self.paper_ref,
            "inputs": _render(self.inputs),
            "lhs": _render(self.lhs),
            "rhs": _render(self.rhs),
            "verdict": self.verdict,
        }
        if self.verdict == DISCREPANCY:
            out["discrepancy_factor"] = _render(self.discrepancy_factor)
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)
    conventions: dict[str, str] = field(default_factory=dict)

    def add(
        self,
        name: str,
        paper_ref: str,
        lhs,
        rhs,
        *,
        inputs: Any = None,
        invariant: bool = False,
        units: Sequence[Any] = (),
        note: str = "",
    ) -> CheckRecord:
        """Compare two sides and record the outcome.

        ``invariant=True`` marks an identity the engine itself guarantees;
        any failure there is an engine defect and is recorded as an error.
        """
        verdict, factor = compare(lhs, rhs, units=units)
        if invariant and verdict != PASS:
            verdict, factor = ERROR, None
        rec = CheckRecord(name, paper_ref, inputs, lhs, rhs, verdict, factor, note)
        self.records.append(rec)
        return rec

    def add_bool(self, name: str, paper_ref: str, ok: bool, *, inputs: Any = None, detail: Any = None) -> CheckRecord:
        rec = CheckRecord(name, paper_ref, inputs, detail, True, PASS if ok else ERROR)
        self.records.append(rec)
        return rec

    def extend(self, other: "Report") -> None:
        self.records.extend(other.records)
        self.conventions.update(other.conventions)

    def by_verdict(self, verdict: str) -> list[CheckRecord]:
        return [r for r in self.records if r.verdict == verdict]

    def factors(self, prefix: str = "") -> set[str]:
        """Distinct discrepancy factors among records whose name starts with ``prefix``."""
        return {
            str(r.discrepancy_factor)
            for r in self.records
            if r.name.startswith(prefix) and r.verdict == DISCREPANCY
        }

    @property
    def ok(self) -> bool:
        return not self.by_verdict(ERROR)

    def summary(self) -> dict[str, int]:
        counts = {PASS: 0, DISCREPANCY: 0, MISMATCH: 0, ERROR: 0}
        for r in self.records:
            counts[r.verdict] += 1
        counts["total"] = len(self.records)
        return counts

    def to_dict(self) -> dict:
        recs = sorted(self.records, key=lambda r: r.name)
        return {
            "suite": self.suite,
            "summary": self.summary(),
            "conventions": dict(sorted(self.conventions.items())),
            "records": [r.to_dict() for r in recs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)


def merge(suite: str, reports: Iterable[Report]) -> Report:
    out = Report(suite)
    for r in reports:
        out.extend(r)
    return out
