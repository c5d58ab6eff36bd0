"""Structured pass/fail evidence for verification runs.

A report is a flat list of claim evaluations.  Each evaluation names the
instance it ran on (e.g. ``wheel(r=4)``), the claim checked, whether it
passed, and a JSON-safe witness on failure (or supporting data on pass).
The JSON schema is stable; documented keys:

    suite_name     str
    wall_time      float, seconds
    instances_run  int, total claim evaluations
    passes         int
    results        [{"instance": str, "claim": str, "passed": bool,
                     "witness": object | null}]
    failures       same shape as results, the failed subset (derived)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class ClaimResult:
    instance: str
    claim: str
    passed: bool
    witness: Optional[Any] = None


@dataclass
class VerificationReport:
    suite_name: str
    results: list[ClaimResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def instances_run(self) -> int:
        return len(self.results)

    @property
    def passes(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def failures(self) -> list[ClaimResult]:
        return [r for r in self.results if not r.passed]

    @property
    def all_passed(self) -> bool:
        return self.passes == self.instances_run

    def record(self, instance: str, claim: str, passed: bool, witness: Any = None) -> None:
        self.results.append(ClaimResult(instance, claim, bool(passed), witness))

    def extend(self, other: "VerificationReport") -> None:
        self.results.extend(other.results)

    def to_dict(self) -> dict:
        def row(r: ClaimResult) -> dict:
            return {"instance": r.instance, "claim": r.claim, "passed": r.passed, "witness": r.witness}

        return {
            "suite_name": self.suite_name,
            "wall_time": self.wall_time,
            "instances_run": self.instances_run,
            "passes": self.passes,
            "results": [row(r) for r in self.results],
            "failures": [row(r) for r in self.failures],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        report = cls(suite_name=data["suite_name"], wall_time=data["wall_time"])
        for row in data["results"]:
            report.record(row["instance"], row["claim"], row["passed"], row.get("witness"))
        return report

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        """Human-readable table, one row per (instance, claim) pair."""
        grouped: dict[tuple[str, str], list[ClaimResult]] = {}
        order: list[tuple[str, str]] = []
        for r in self.results:
            key = (r.instance, r.claim)
            if key not in grouped:
                grouped[key] = []
                order.append(key)
            grouped[key].append(r)

        lines = [
            f"suite: {self.suite_name}",
            f"claims: {self.instances_run}   passed: {self.passes}   "
            f"failed: {len(self.failures)}   wall_time: {self.wall_time:.2f}s",
        ]
        if order:
            width_i = max(len(k[0]) for k in order)
            width_c = max(len(k[1]) for k in order)
            lines.append(f"{'instance':<{width_i}}  {'claim':<{width_c}}  checked  passed  status")
            for instance, claim in order:
                rows = grouped[(instance, claim)]
                ok = sum(1 for r in rows if r.passed)
                status = "PASS" if ok == len(rows) else "FAIL"
                lines.append(f"{instance:<{width_i}}  {claim:<{width_c}}  {len(rows):>7}  {ok:>6}  {status}")
        for r in self.failures:
            lines.append(f"FAIL {r.instance} :: {r.claim} :: witness={json.dumps(r.witness)}")
        return "\n".join(lines)
