"""Structured pass/fail reports shared by the verifiers and the CLI.

JSON output is deterministic: keys are sorted and timings are only
included on request, so a fixed seed yields byte-identical reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None
    millis: float | None = None


@dataclass
class Report:
    suite: str
    config: dict = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str | None = None,
            millis: float | None = None) -> CheckResult:
        result = CheckResult(name, passed, witness, millis)
        self.checks.append(result)
        return result

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timings: bool = False) -> dict:
        checks = []
        for c in self.checks:
            entry: dict = {"name": c.name, "status": "pass" if c.passed else "fail"}
            if c.witness is not None:
                entry["witness"] = c.witness
            if timings and c.millis is not None:
                entry["millis"] = round(c.millis, 3)
            checks.append(entry)
        return {
            "suite": self.suite,
            "config_echo": self.config,
            "checks": checks,
            "aggregate": "pass" if self.passed else "fail",
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings=timings), indent=2, sort_keys=True)

    def to_text(self, timings: bool = False) -> str:
        lines = [f"suite: {self.suite}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"  [{status}] {c.name}"
            if timings and c.millis is not None:
                line += f" ({c.millis:.1f} ms)"
            if c.witness and not c.passed:
                line += f"  witness: {c.witness}"
            lines.append(line)
        lines.append(f"aggregate: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)
