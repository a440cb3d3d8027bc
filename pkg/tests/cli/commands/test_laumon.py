from unittest.mock import patch

import pytest
from click.testing import CliRunner

from edaha.cli.commands.laumon import laumon
from edaha.core.config import AppConfig
from edaha.core.exceptions import ConfigError
from edaha.core.report import CheckRecord, Report


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def passing_report():
    return Report(suite="laumon-numeric", checks=[CheckRecord(id="psi12 sample 0", tier="numeric", passed=True)])


def test_check_needs_both_indices(runner):
    result = runner.invoke(laumon, ["check", "--i", "1"], obj=AppConfig())

    assert result.exit_code != 0
    assert isinstance(result.exception, ConfigError)


def test_check_single_pair(runner, passing_report):
    with patch("edaha.libs.laumon.conjecture_check", return_value=passing_report) as check:
        result = runner.invoke(
            laumon,
            ["check", "--i", "1", "--j", "2", "--p", "0.05", "--max-boxes", "4"],
            obj=AppConfig(),
        )

    assert result.exit_code == 0, result.output
    i, j, mode, laumon_config, _ = check.call_args.args
    assert (i, j, mode) == (1, 2, "numeric")
    assert laumon_config.p == 0.05
    assert laumon_config.max_boxes == 4
    assert laumon_config.s == AppConfig().laumon.s


def test_check_all_pairs(runner, passing_report):
    with patch("edaha.libs.laumon.laumon_report", return_value=passing_report) as report:
        result = runner.invoke(laumon, ["check", "--mode", "series"], obj=AppConfig())

    assert result.exit_code == 0, result.output
    assert report.call_args.args[3] == "series"
    assert len(report.call_args.args[2]) == 9


def test_check_rejects_indices_out_of_range(runner):
    result = runner.invoke(laumon, ["check", "--i", "4", "--j", "1"], obj=AppConfig())

    assert result.exit_code == 2
