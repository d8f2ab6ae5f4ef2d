"""Check reports: named pass/fail results with first-counterexample data."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    counterexample: tuple | None = None  # ((name, index), ...) in quantifier order

    def to_dict(self):
        d = {"check": self.check_id, "pass": self.passed}
        d["counterexample"] = (
            None if self.counterexample is None else {k: v for k, v in self.counterexample}
        )
        return d


@dataclass
class CheckReport:
    """Ordered list of check results; passes iff every check passes."""

    results: list = field(default_factory=list)

    def add(self, check_id: str, passed: bool, counterexample=None):
        if passed:
            counterexample = None
        elif counterexample is not None:
            counterexample = tuple(counterexample)
        self.results.append(CheckResult(check_id, bool(passed), counterexample))

    def extend(self, other: "CheckReport"):
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failed_ids(self):
        return [r.check_id for r in self.results if not r.passed]

    def result(self, check_id: str) -> CheckResult:
        for r in self.results:
            if r.check_id == check_id:
                return r
        raise KeyError(check_id)

    def has(self, check_id: str) -> bool:
        return any(r.check_id == check_id for r in self.results)

    def to_dict(self):
        return {"pass": self.passed, "checks": [r.to_dict() for r in self.results]}

    def pretty(self) -> str:
        lines = []
        for r in self.results:
            mark = "ok  " if r.passed else "FAIL"
            extra = ""
            if r.counterexample:
                extra = "  at " + ", ".join("%s=%s" % kv for kv in r.counterexample)
            lines.append("%s %s%s" % (mark, r.check_id, extra))
        return "\n".join(lines)


# The coefficient checks report in exactly the same shape.
AydReport = CheckReport
