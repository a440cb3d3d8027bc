import json

from edaha.core.report import CheckRecord, Report, merge_reports, stopwatch


def _record(check_id, passed=True, **kwargs):
    return CheckRecord(id=check_id, passed=passed, **kwargs)


def test_report_passes_only_when_every_check_passes():
    report = Report(suite="sl2z")
    assert report.passed
    report.add(_record("braid"))
    assert report.passed
    report.add(_record("s-squared", passed=False, detail="entry (1,1)"))
    assert not report.passed
    assert [c.id for c in report.failures] == ["s-squared"]


def test_record_accepts_the_json_alias():
    record = CheckRecord.model_validate({"id": "x", "pass": True})
    assert record.passed


def test_to_json_uses_pass_and_can_drop_timings():
    report = Report(suite="qpoch", checks=[_record("inversion", tier="numeric", residual=1e-40, ms=3.5)])
    data = json.loads(report.to_json())
    assert data["pass"] is True
    assert data["checks"][0]["pass"] is True
    assert data["checks"][0]["tier"] == "numeric"
    assert data["checks"][0]["ms"] == 3.5

    data = json.loads(report.to_json(timings=False))
    assert "ms" not in data["checks"][0]


def test_merge_prefixes_suite_names():
    first = Report(suite="sl2z", policy={"tol": 1e-30}, checks=[_record("braid")])
    second = Report(suite="psi0", checks=[_record("rank", passed=False)])
    merged = merge_reports("all", [first, second])
    assert merged.suite == "all"
    assert merged.policy == {"tol": 1e-30}
    assert [c.id for c in merged.checks] == ["sl2z/braid", "psi0/rank"]
    assert not merged.passed
    # originals untouched
    assert first.checks[0].id == "braid"


def test_merge_of_nothing():
    merged = merge_reports("all", [])
    assert merged.passed
    assert merged.checks == []


def test_stopwatch_fills_ms():
    with stopwatch() as timing:
        sum(range(1000))
    assert timing["ms"] >= 0
