import importlib
from typing import Dict, Optional

import click


class LazyGroup(click.Group):
    """
    A group whose subcommands are imported on first use.

    The verification commands pull in sympy and mpmath; keeping them out of
    ``edaha --help`` and ``edaha config`` keeps start-up fast.

    Args:
        root: Package holding the command modules, e.g. ``edaha.cli.commands``.
        lazy_subcommands: ``command name -> "module.attribute"`` under ``root``.
    """

    def __init__(self, root: str, *args, lazy_subcommands: Optional[Dict[str, str]] = None, **kwargs):
        super().__init__(*args, **kwargs)
        self.root = root
        self.lazy_subcommands = lazy_subcommands or {}

    def list_commands(self, ctx):
        return super().list_commands(ctx) + sorted(self.lazy_subcommands)

    def get_command(self, ctx, cmd_name):  # pyright:ignore
        target = self.lazy_subcommands.get(cmd_name)
        if target is None:
            return super().get_command(ctx, cmd_name)
        module_name, attribute = target.rsplit(".", 1)
        command = getattr(importlib.import_module(f".{module_name}", package=self.root), attribute)
        if not isinstance(command, click.Command):
            raise ValueError(f"{self.root}.{target} is not a click command")
        return command
