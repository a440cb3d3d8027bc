import json
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from edaha.cli.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def no_handlers():
    with patch("edaha.cli.cli.setup_logging"), patch("edaha.cli.cli.setup_exceptions_handler"):
        yield


def test_root_options_override_the_config(runner):
    result = runner.invoke(
        cli, ["--no-config", "--precision", "60", "--laumon-max-boxes", "8", "config", "--view-json"]
    )

    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["numeric"]["precision"] == 60
    assert data["laumon"]["max_boxes"] == 8
    assert data["numeric"]["tol"] == 1e-30


def test_environment_overrides(runner):
    result = runner.invoke(cli, ["--no-config", "config", "--view-json"], env={"EDAHA_SEED": "7"})

    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["numeric"]["seed"] == 7


def test_out_of_range_option_is_a_usage_error(runner):
    result = runner.invoke(cli, ["--no-config", "--laumon-p", "1.0", "config", "--path"])

    assert result.exit_code == 2


def test_config_file_is_loaded(runner, tmp_path):
    path = tmp_path / "config.toml"
    path.write_text("[verify]\nworkers = 3\n", encoding="utf-8")
    with patch("edaha.cli.cli.USER_CONFIG", path):
        result = runner.invoke(cli, ["--workers", "5", "config", "--view-json", "--section", "verify"])

    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["workers"] == 5


def test_lazy_commands_are_listed(runner):
    result = runner.invoke(cli, ["--help"])

    assert result.exit_code == 0
    for name in ("config", "eval", "laumon", "verify"):
        assert name in result.output
