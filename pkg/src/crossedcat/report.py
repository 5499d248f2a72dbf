"""Verification reports: named checks with deterministic witnesses."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Optional[tuple] = None

    def to_json(self) -> dict:
        d: dict[str, Any] = {"name": self.name, "pass": self.passed}
        if not self.passed:
            d["witness"] = list(self.witness) if self.witness is not None else None
        return d


@dataclass
class VerificationReport:
    """Outcome of one verifier run.

    `witness` is present iff the check failed, and is the lexicographically
    first failing tuple for the sweep that produced it.  `elapsed` is kept
    off the JSON body so identical inputs serialize byte-identically.
    """

    subject: str
    checks: list[Check] = field(default_factory=list)
    input_digest: Optional[str] = None
    elapsed: Optional[float] = None
    stats: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: Optional[tuple] = None) -> None:
        self.checks.append(Check(name, passed, None if passed else witness))

    def first_failure(self) -> Optional[Check]:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def check_names(self) -> list[str]:
        return [c.name for c in self.checks]

    def to_json(self) -> dict:
        body: dict[str, Any] = {
            "subject": self.subject,
            "pass": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }
        if self.stats is not None:
            body["stats"] = self.stats
        if self.input_digest is not None:
            body["inputDigest"] = self.input_digest
        return body

    def render(self, pretty: bool = False) -> str:
        if not pretty:
            return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            extra = "" if c.passed else f"  witness={c.witness}"
            lines.append(f"  [{mark}] {c.name}{extra}")
        if self.elapsed is not None:
            lines.append(f"  ({self.elapsed:.3f}s)")
        return "\n".join(lines)


def digest_of(obj: Any) -> str:
    """Stable sha256 of a JSON-serializable object."""
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def first_witness(sweep: Iterable[tuple], fails: Callable[[tuple], bool]) -> Optional[tuple]:
    """First tuple (in the iteration order, expected lexicographic) failing `fails`."""
    for t in sweep:
        if fails(t):
            return t
    return None


def run_checks(report: VerificationReport, named: Sequence[tuple[str, Callable[[], Optional[tuple]]]],
               jobs: int = 1) -> VerificationReport:
    """Run (name, callable) checks; callable returns a witness or None.

    With jobs > 1 the checks run on a thread pool; results merge in the
    given order so reports stay deterministic.
    """
    if jobs > 1 and len(named) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda nc: nc[1](), named))
        for (name, _), witness in zip(named, results):
            report.add(name, witness is None, witness)
    else:
        for name, fn in named:
            witness = fn()
            report.add(name, witness is None, witness)
    return report
