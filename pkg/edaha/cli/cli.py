import logging
import sys
from typing import Any, Dict

import click
from click.core import ParameterSource

from ..core.config import AppConfig
from ..core.constants import CLI_NAME, USER_CONFIG, __version__
from .config import ConfigLoader
from .options import ConfigOption, options_from_model
from .utils.exception import setup_exceptions_handler
from .utils.lazyloader import LazyGroup
from .utils.logging import setup_logging

logger = logging.getLogger(__name__)

commands = {
    "config": "config.config",
    "verify": "verify.verify",
    "laumon": "laumon.laumon",
    "eval": "evaluate.evaluate",
}


def collect_overrides(ctx: click.Context) -> Dict[str, Dict[str, Any]]:
    """Config values given on the command line or through ``EDAHA_*``, by section."""
    overrides: Dict[str, Dict[str, Any]] = {}
    params = {p.name: p for p in ctx.command.params}
    for name, value in ctx.params.items():
        parameter = params.get(name)
        if not isinstance(parameter, ConfigOption) or parameter.model_name is None:
            continue
        source = ctx.get_parameter_source(name)
        if source not in (ParameterSource.ENVIRONMENT, ParameterSource.COMMANDLINE):
            continue
        overrides.setdefault(parameter.model_name, {})[parameter.field_name] = value
    return overrides


@click.group(
    cls=LazyGroup,
    root="edaha.cli.commands",
    lazy_subcommands=commands,
    context_settings=dict(auto_envvar_prefix=CLI_NAME),
)
@click.version_option(__version__, "--version")
@click.option("--no-config", is_flag=True, help="Don't load the user config file.")
@click.option("--trace", is_flag=True, help="Show full tracebacks on errors.")
@click.option("--log", is_flag=True, help="Mirror log records to the terminal.")
@click.option("--rich-traceback", is_flag=True, help="Render tracebacks with rich.")
@click.option(
    "--rich-traceback-theme",
    default="github-dark",
    help="The pygments theme of rich tracebacks.",
)
@options_from_model(AppConfig)
@click.pass_context
def cli(ctx: click.Context, **options):
    """
    Exact and numeric verification of the elliptic A1 spherical DAHA at K = 2.
    """
    setup_logging(options["log"])
    setup_exceptions_handler(
        options["trace"], options["rich_traceback"], options["rich_traceback_theme"]
    )
    logger.info(f"Current Command: {' '.join(sys.argv)}")

    overrides = collect_overrides(ctx)
    if options["no_config"]:
        ctx.obj = AppConfig.model_validate(overrides)
    else:
        ctx.obj = ConfigLoader(config_path=USER_CONFIG).load(overrides)
    logger.debug(f"Config overrides: {overrides}")
