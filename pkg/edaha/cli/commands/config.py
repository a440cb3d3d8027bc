import click

from ...core.config import AppConfig

SECTIONS = tuple(AppConfig.model_fields)


@click.command(
    help="Show, edit or update the settings of the verification suites",
    short_help="Edit your config",
    epilog="""
\b
\b\bExamples:
  # edit the file in your default editor
  edaha config
\b
  # where the file lives
  edaha config --path
\b
  # persist higher precision and a larger partition sum
  edaha --precision 80 --laumon-max-boxes 8 config --update
\b
  # the numeric policy in effect, as json
  edaha config --view-json --section numeric
\b
  # back to the commented defaults
  edaha config --reset
""",
)
@click.option("--path", "-p", help="Print the config location and exit", is_flag=True)
@click.option("--view", "-v", help="Show the effective config as TOML", is_flag=True)
@click.option("--view-json", "-vj", help="Show the effective config as JSON", is_flag=True)
@click.option(
    "--section",
    "-s",
    type=click.Choice(SECTIONS),
    help="Limit --view-json to one section.",
)
@click.option(
    "--update",
    "-u",
    help="Write the effective config, overrides included, to the file",
    is_flag=True,
)
@click.option("--reset", help="Overwrite the file with the defaults", is_flag=True)
@click.pass_obj
def config(user_config: AppConfig, path, view, view_json, section, update, reset):
    from ...core import constants
    from ..config.generate import generate_config_toml_from_app_model

    target = constants.USER_CONFIG
    if path:
        click.echo(target)
    elif view:
        from rich.console import Console
        from rich.syntax import Syntax

        Console().print(
            Syntax(
                generate_config_toml_from_app_model(user_config),
                "toml",
                theme=user_config.general.pygment_style,
                line_numbers=True,
                word_wrap=True,
            )
        )
    elif view_json:
        data = user_config.model_dump(mode="json")
        click.echo(_json(data[section] if section else data))
    elif update or reset:
        written = AppConfig() if reset else user_config
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(generate_config_toml_from_app_model(written), encoding="utf-8")
        click.echo(f"Configuration saved to {target}")
    else:
        click.edit(filename=str(target))


def _json(data) -> str:
    import json

    return json.dumps(data, indent=2)
