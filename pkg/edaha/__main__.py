"""Entry point for ``python -m edaha``."""

from . import Cli

if __name__ == "__main__":
    Cli()
