"""
Records produced by the verification suites.

Every check reports which tier decided it: ``symbolic`` when the canonical forms
already agree, ``numeric`` when a sampled residual was needed. Reports are
pydantic models so the CLI can write them as JSON unchanged.
"""

import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field

Tier = Literal["symbolic", "numeric"]


class CheckRecord(BaseModel):
    """One identity check."""

    model_config = ConfigDict(populate_by_name=True)

    id: str
    tier: Tier = "symbolic"
    residual: float = 0.0
    passed: bool = Field(alias="pass")
    ms: float = 0.0
    detail: str = ""


class Report(BaseModel):
    """
    The outcome of one suite.

    Attributes:
        suite: Name of the suite, e.g. ``sl2z``.
        policy: Echo of the settings the suite ran with.
        checks: Records in a deterministic order.
    """

    suite: str
    policy: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckRecord] = Field(default_factory=list)

    @computed_field(alias="pass")  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckRecord]:
        return [check for check in self.checks if not check.passed]

    def add(self, record: CheckRecord) -> CheckRecord:
        self.checks.append(record)
        return record

    def extend(self, records: List[CheckRecord]) -> None:
        self.checks.extend(records)

    def to_json(self, timings: bool = True) -> str:
        exclude: Optional[Dict[str, Any]] = None
        if not timings:
            exclude = {"checks": {"__all__": {"ms"}}}
        return self.model_dump_json(indent=2, by_alias=True, exclude=exclude)


def merge_reports(suite: str, reports: List[Report]) -> Report:
    """Concatenates several suites, prefixing check ids with their suite name."""
    merged = Report(suite=suite, policy=reports[0].policy if reports else {})
    for report in reports:
        for check in report.checks:
            merged.add(check.model_copy(update={"id": f"{report.suite}/{check.id}"}))
    return merged


@contextmanager
def stopwatch() -> Iterator[Dict[str, float]]:
    """Yields a dict whose ``ms`` entry is filled in when the block exits."""
    timing = {"ms": 0.0}
    start = time.perf_counter()
    try:
        yield timing
    finally:
        timing["ms"] = round((time.perf_counter() - start) * 1000, 3)
