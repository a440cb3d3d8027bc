import json
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from edaha.cli.commands.config import config
from edaha.core.config import AppConfig


@pytest.fixture
def runner():
    return CliRunner()


def test_config_path(runner):
    with patch("edaha.core.constants.USER_CONFIG", "/tmp/edaha/config.toml"):
        result = runner.invoke(config, ["--path"], obj=AppConfig())

    assert result.exit_code == 0
    assert result.output.strip() == "/tmp/edaha/config.toml"


def test_config_view_json(runner):
    app_config = AppConfig.model_validate({"numeric": {"precision": 60}})
    result = runner.invoke(config, ["--view-json"], obj=app_config)

    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["numeric"]["precision"] == 60
    assert data["laumon"]["max_boxes"] == 6


def test_config_update_writes_toml(runner, tmp_path):
    target = tmp_path / "config.toml"
    app_config = AppConfig.model_validate({"verify": {"workers": 2}})
    with patch("edaha.core.constants.USER_CONFIG", target):
        result = runner.invoke(config, ["--update"], obj=app_config)

    assert result.exit_code == 0, result.output
    assert "workers = 2" in target.read_text(encoding="utf-8")


def test_config_view_json_section(runner):
    result = runner.invoke(config, ["--view-json", "--section", "verify"], obj=AppConfig())

    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["workers"] == 4


def test_config_reset_writes_defaults(runner, tmp_path):
    target = tmp_path / "config.toml"
    app_config = AppConfig.model_validate({"verify": {"workers": 2}})
    with patch("edaha.core.constants.USER_CONFIG", target):
        result = runner.invoke(config, ["--reset"], obj=app_config)

    assert result.exit_code == 0, result.output
    assert "workers = 4" in target.read_text(encoding="utf-8")
