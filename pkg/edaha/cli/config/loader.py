import logging
import tomllib
from pathlib import Path
from typing import Any, Dict, Optional

import click
from pydantic import ValidationError

from ...core.config import AppConfig
from ...core.constants import USER_CONFIG
from ...core.exceptions import ConfigError

logger = logging.getLogger(__name__)

Overrides = Dict[str, Dict[str, Any]]


class ConfigLoader:
    """
    Reads ``config.toml`` and validates it into an ``AppConfig``.

    Values from the command line are layered over the file section by section,
    so ``--precision 80`` replaces only ``numeric.precision``. A missing file
    is replaced by the commented defaults on first use.

    Args:
        config_path: The TOML file, normally ``USER_CONFIG``.
    """

    def __init__(self, config_path: Path = USER_CONFIG):
        self.config_path = config_path

    def load(self, update: Optional[Overrides] = None, allow_setup: bool = True) -> AppConfig:
        """
        Returns:
            The validated config with ``update`` applied on top of the file.

        Raises:
            ConfigError: If the file does not parse, a value is out of range or
                the default file cannot be written.
        """
        update = update or {}
        if not self.config_path.exists():
            if allow_setup:
                self._write_defaults()
            return self._validate(update)

        try:
            with self.config_path.open("rb") as f:
                data = tomllib.load(f)
        except tomllib.TOMLDecodeError as e:
            raise ConfigError(f"Error parsing configuration file '{self.config_path}':\n{e}")
        return self._validate(merge_overrides(data, update))

    def _write_defaults(self) -> None:
        from .generate import generate_config_toml_from_app_model

        try:
            self.config_path.parent.mkdir(parents=True, exist_ok=True)
            self.config_path.write_text(generate_config_toml_from_app_model(AppConfig()), encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"Could not create configuration file at {self.config_path!s}: {e}")
        logger.info(f"Wrote default configuration to {self.config_path}")
        click.echo(f"Configuration file created at: {self.config_path}", err=True)

    def _validate(self, data: Dict[str, Any]) -> AppConfig:
        try:
            return AppConfig.model_validate(data)
        except ValidationError as e:
            raise ConfigError(
                f"Configuration error in '{self.config_path}'!\n"
                f"Please correct the following issues:\n\n{e}"
            )


def merge_overrides(data: Dict[str, Any], update: Overrides) -> Dict[str, Any]:
    """``data`` with every section of ``update`` merged into it; ``data`` is not modified."""
    merged = {section: dict(values) if isinstance(values, dict) else values for section, values in data.items()}
    for section, values in update.items():
        current = merged.get(section)
        merged[section] = {**current, **values} if isinstance(current, dict) else dict(values)
    return merged
