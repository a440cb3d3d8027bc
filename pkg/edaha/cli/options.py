"""
Root CLI options generated from the config models.

Every field of ``AppConfig`` becomes one option of the ``edaha`` group, so a
value in ``config.toml`` can be overridden per run (``--precision 80``) or
through ``EDAHA_*`` environment variables. Sections deriving from
``PrefixedConfig`` prefix their options with the section name, which keeps
``--laumon-tol`` apart from the numeric ``--tol``.
"""

from collections.abc import Callable
from typing import Any, List, Literal, Optional, get_args, get_origin

import click
from pydantic import BaseModel
from pydantic.fields import FieldInfo
from pydantic_core import PydanticUndefined

from ..core.config.model import PrefixedConfig

TYPE_MAP = {
    str: click.STRING,
    int: click.INT,
    bool: click.BOOL,
    float: click.FLOAT,
}


class ConfigOption(click.Option):
    """A click option that remembers which config section and field it overrides."""

    model_name: Optional[str]
    field_name: Optional[str]

    def __init__(self, *args, **kwargs):
        self.model_name = kwargs.pop("model_name", None)
        self.field_name = kwargs.pop("field_name", None)
        super().__init__(*args, **kwargs)


def section_name(model: type[BaseModel]) -> str:
    """``LaumonConfig`` -> ``laumon``."""
    return model.__name__.lower().replace("config", "")


def options_from_model(model: type[BaseModel]) -> Callable:
    """
    Builds a decorator adding one ``ConfigOption`` per leaf field of ``model``.

    Nested sections are walked recursively. No defaults are attached: an option
    only counts as an override when it was given on the command line or in the
    environment, and the loader fills everything else from the file.
    """
    decorators = _collect(model)

    def decorator(f: Callable) -> Callable:
        for deco in reversed(decorators):
            f = deco(f)
        return f

    return decorator


def _collect(model: type[BaseModel]) -> List[Callable]:
    decorators = []
    prefix = f"{section_name(model)}-" if issubclass(model, PrefixedConfig) else ""

    for field_name, field_info in model.model_fields.items():
        annotation = field_info.annotation
        if isinstance(annotation, type) and issubclass(annotation, BaseModel):
            decorators.extend(_collect(annotation))
            continue

        flag = f"--{prefix}{field_name.replace('_', '-')}"
        if annotation is bool:
            flag = f"{flag}/--no-{prefix}{field_name.replace('_', '-')}"
        help_text = field_info.description or ""
        if field_info.default is not PydanticUndefined:
            help_text = f"{help_text} [default: {field_info.default}]"

        decorators.append(
            click.option(
                flag,
                cls=ConfigOption,
                model_name=section_name(model),
                field_name=field_name,
                type=_get_click_type(field_info),
                default=None,
                help=help_text,
            )
        )
    return decorators


def _get_click_type(field_info: FieldInfo) -> Any:
    """Maps a field to a click type, carrying numeric bounds into a range type."""
    field_type = field_info.annotation

    if get_origin(field_type) is Literal:
        return click.Choice([str(choice) for choice in get_args(field_type)])

    if field_type not in (int, float):
        return TYPE_MAP.get(field_type, click.STRING)  # type: ignore[arg-type]

    bounds: dict = {}
    for constraint in field_info.metadata:
        if getattr(constraint, "ge", None) is not None:
            bounds["min"] = constraint.ge
        if getattr(constraint, "gt", None) is not None:
            bounds["min"] = constraint.gt
            bounds["min_open"] = True
        if getattr(constraint, "le", None) is not None:
            bounds["max"] = constraint.le
        if getattr(constraint, "lt", None) is not None:
            bounds["max"] = constraint.lt
            bounds["max_open"] = True

    if not bounds:
        return TYPE_MAP[field_type]
    if field_type is int:
        # open bounds never occur on integer fields
        return click.IntRange(bounds.get("min"), bounds.get("max"))
    return click.FloatRange(
        bounds.get("min"),
        bounds.get("max"),
        min_open=bounds.get("min_open", False),
        max_open=bounds.get("max_open", False),
    )
