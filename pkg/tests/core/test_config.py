import tomllib

import pytest
from pydantic import ValidationError

from edaha.cli.config import ConfigLoader
from edaha.cli.config.generate import generate_config_toml_from_app_model
from edaha.core.config import AppConfig
from edaha.core.exceptions import ConfigError


def test_defaults():
    config = AppConfig()
    assert config.numeric.precision == 50
    assert config.numeric.epsilon == 0.5
    assert config.numeric.max_product_index == 200
    assert config.verify.workers == 4
    assert config.laumon.Q == 1.5


@pytest.mark.parametrize(
    "section, values",
    [
        ("numeric", {"precision": 5}),
        ("numeric", {"epsilon": 1.0}),
        ("verify", {"max_total_len": 7}),
        ("laumon", {"p": 1.0}),
        ("laumon", {"Q": 1.0}),
    ],
)
def test_out_of_range_values_are_rejected(section, values):
    with pytest.raises(ValidationError):
        AppConfig.model_validate({section: values})


def test_generated_toml_is_commented_and_parses():
    text = generate_config_toml_from_app_model(AppConfig())
    assert "[numeric]" in text
    assert "[laumon]" in text
    assert "# Type: integer (>= 15, <= 1000)" in text
    data = tomllib.loads(text)
    assert data["numeric"]["tol"] == 1e-30
    assert data["general"]["pygment_style"] == "github-dark"
    assert AppConfig.model_validate(data) == AppConfig()


def test_loader_writes_defaults_on_first_run(tmp_path):
    path = tmp_path / "edaha" / "config.toml"
    config = ConfigLoader(config_path=path).load({"numeric": {"precision": 80}})
    assert path.exists()
    assert config.numeric.precision == 80
    # the file keeps the defaults, overrides are not persisted
    assert ConfigLoader(config_path=path).load().numeric.precision == 50


def test_loader_applies_overrides_on_top_of_the_file(tmp_path):
    path = tmp_path / "config.toml"
    path.write_text("[verify]\nworkers = 2\nmax_word_len = 2\n", encoding="utf-8")
    config = ConfigLoader(config_path=path).load({"verify": {"workers": 8}})
    assert config.verify.workers == 8
    assert config.verify.max_word_len == 2


def test_loader_reports_bad_files(tmp_path):
    path = tmp_path / "config.toml"
    path.write_text("[numeric\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        ConfigLoader(config_path=path).load()

    path.write_text("[numeric]\nprecision = 3\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        ConfigLoader(config_path=path).load()


def test_merge_overrides_keeps_the_input():
    from edaha.cli.config.loader import merge_overrides

    data = {"numeric": {"precision": 40, "seed": 1}}
    merged = merge_overrides(data, {"numeric": {"precision": 80}, "verify": {"workers": 2}})
    assert merged == {"numeric": {"precision": 80, "seed": 1}, "verify": {"workers": 2}}
    assert data == {"numeric": {"precision": 40, "seed": 1}}
