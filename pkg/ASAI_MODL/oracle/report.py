# -*- coding: utf-8 -*-
"""
Oracle results: what was checked, what disagreed, and named tallies with
their first witnesses.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

__all__ = ["Failure", "OracleReport"]

# cap on stored failure rows per report; the count keeps growing
MAX_FAILURE_ROWS = 50


@dataclass(frozen=True)
class Failure:
    input: Dict[str, Any]
    expected: Any
    actual: Any
    tag: str

    def to_dict(self) -> dict:
        return {"input": self.input, "expected": self.expected, "actual": self.actual, "tag": self.tag}


@dataclass
class OracleReport:
    name: str
    setting: Dict[str, Any] = field(default_factory=dict)
    checked: int = 0
    failures: List[Failure] = field(default_factory=list)
    failure_count: int = 0
    counts: Counter = field(default_factory=Counter)
    witnesses: Dict[str, int] = field(default_factory=dict)
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, tag: str, expected, actual, **inputs) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURE_ROWS:
            self.failures.append(Failure(input=dict(self.setting, **inputs), expected=expected,
                                         actual=actual, tag=tag))

    def expect(self, tag: str, expected, actual, **inputs) -> bool:
        if expected != actual:
            self.fail(tag, expected, actual, **inputs)
            return False
        return True

    def tally(self, key: str, n: int = 1, witness: Optional[int] = None) -> None:
        self.counts[key] += n
        if witness is not None and witness >= 0 and key not in self.witnesses:
            self.witnesses[key] = witness

    def skip(self, reason: str) -> "OracleReport":
        self.skipped += 1
        self.counts["skipped:" + reason] += 1
        return self

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "setting": self.setting,
            "passed": self.passed,
            "checked": self.checked,
            "skipped": self.skipped,
            "failure_count": self.failure_count,
            "failures": [f.to_dict() for f in self.failures],
            "counts": dict(sorted(self.counts.items())),
            "witnesses": dict(sorted(self.witnesses.items())),
        }
