import json
from unittest.mock import MagicMock, patch

import pytest
from click.testing import CliRunner

from edaha.cli.commands.verify import verify
from edaha.core.config import AppConfig
from edaha.core.report import CheckRecord, Report


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def config():
    return AppConfig()


def _suite(name, passed=True):
    return MagicMock(
        return_value=Report(suite=name, checks=[CheckRecord(id=f"{name} check", passed=passed)])
    )


def test_verify_sl2z_passes(runner, config):
    suite = _suite("sl2z")
    with patch.dict("edaha.cli.commands.verify.SUITES", {"sl2z": suite}):
        result = runner.invoke(verify, ["sl2z"], obj=config)

    assert result.exit_code == 0, result.output
    suite.assert_called_once_with(config)
    assert "sl2z check" in result.output


def test_verify_exits_with_two_on_failure(runner, config):
    with patch.dict("edaha.cli.commands.verify.SUITES", {"psi0": _suite("psi0", passed=False)}):
        result = runner.invoke(verify, ["psi0"], obj=config)

    assert result.exit_code == 2


def test_verify_writes_json(runner, config, tmp_path):
    out = tmp_path / "qpoch.json"
    with patch.dict("edaha.cli.commands.verify.SUITES", {"qpoch": _suite("qpoch")}):
        result = runner.invoke(verify, ["qpoch", "--json", str(out)], obj=config)

    assert result.exit_code == 0, result.output
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["suite"] == "qpoch"
    assert data["pass"] is True


def test_verify_relations_overrides_the_config(runner, config):
    suite = _suite("relations")
    with patch.dict("edaha.cli.commands.verify.SUITES", {"relations": suite}):
        result = runner.invoke(verify, ["relations", "--max-total-len", "3"], obj=config)

    assert result.exit_code == 0, result.output
    used = suite.call_args.args[0]
    assert used.verify.max_total_len == 3
    assert used.verify.random_tuples == config.verify.random_tuples


def test_verify_all_merges_every_suite(runner, config, tmp_path):
    names = ["qpoch", "sl2z", "relations", "shifts", "equivariance", "appendix", "casimir", "psi0", "eigen"]
    suites = {name: _suite(name) for name in names}
    out = tmp_path / "all.json"
    with patch.dict("edaha.cli.commands.verify.SUITES", suites, clear=True):
        result = runner.invoke(verify, ["all", "--json", str(out)], obj=config)

    assert result.exit_code == 0, result.output
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["suite"] == "all"
    assert [c["id"] for c in data["checks"]] == [f"{name}/{name} check" for name in names]


def test_verify_appendix_family(runner, config):
    report = Report(suite="appendix-R4A", checks=[CheckRecord(id="R4A a", passed=True)])
    with patch("edaha.libs.freealgebra.appendix_certificates", return_value=report) as certificates:
        result = runner.invoke(verify, ["appendix", "--family", "R4A"], obj=config)

    assert result.exit_code == 0, result.output
    certificates.assert_called_once_with("R4A", config.verify.workers)
