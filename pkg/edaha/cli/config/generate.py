"""Renders ``AppConfig`` as a commented ``config.toml``."""

import json
import textwrap
from typing import Any, List, Literal, get_args, get_origin

from pydantic import BaseModel
from pydantic.fields import FieldInfo
from pydantic_core import PydanticUndefined

from ...core.config import AppConfig
from ...core.constants import CLI_NAME_LOWER

CONFIG_HEADER = f"""
# ==============================================================================
# Configuration of {CLI_NAME_LOWER}, in TOML.
# Every option can also be passed on the command line, e.g. --precision 60 or
# --laumon-max-boxes 8.
# Run `{CLI_NAME_LOWER} config --update` to write the current overrides here.
# ==============================================================================
""".lstrip()

TYPE_NAMES = {str: "string", int: "integer", float: "float", bool: "boolean"}
BOUND_SYMBOLS = (("ge", ">="), ("gt", ">"), ("le", "<="), ("lt", "<"))


def generate_config_toml_from_app_model(app_model: AppConfig) -> str:
    """One TOML table per section; every key is preceded by its help, type and default."""
    lines = [CONFIG_HEADER]
    for name, section in app_model:
        lines.extend(_section_lines(name, section))
    lines.append("")
    return "\n".join(lines)


def _section_lines(name: str, section: BaseModel) -> List[str]:
    summary = (type(section).__doc__ or name.title()).strip().splitlines()[0]
    lines = [f"\n# {summary}", f"[{name}]"]
    for field_name, info in type(section).model_fields.items():
        lines.append("")
        if info.description:
            lines.append(_comment(info.description))
        lines.append(_comment(describe_field(info)))
        value = getattr(section, field_name)
        lines.append(f"# {field_name} =" if value is None else f"{field_name} = {format_toml_value(value)}")
    return lines


def _comment(text: str) -> str:
    return textwrap.fill(text, width=78, initial_indent="# ", subsequent_indent="# ")


def format_toml_value(value: Any) -> str:
    """The scalar values the config uses, as TOML literals."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return repr(value)
    return json.dumps(str(value))


def describe_field(info: FieldInfo) -> str:
    """e.g. ``Type: integer (>= 15, <= 1000), default 50``."""
    annotation = info.annotation
    if get_origin(annotation) is Literal:
        text = "One of " + ", ".join(json.dumps(choice) for choice in get_args(annotation))
    else:
        text = f"Type: {TYPE_NAMES.get(annotation, 'value')}"  # type: ignore[arg-type]
        bounds = [
            f"{symbol} {getattr(constraint, attr)}"
            for constraint in info.metadata
            for attr, symbol in BOUND_SYMBOLS
            if getattr(constraint, attr, None) is not None
        ]
        if bounds:
            text += f" ({', '.join(bounds)})"
    if info.default is not PydanticUndefined:
        text += f", default {format_toml_value(info.default)}"
    return text
