"""Verification of the elliptic A1 spherical DAHA at K = 2."""

import sys

if sys.version_info < (3, 11):
    raise ImportError("edaha needs Python 3.11 or newer (tomllib, PEP 604 unions).")


def Cli():
    """Console-script entry point; the CLI is imported lazily."""
    from .cli import run_cli

    run_cli()
