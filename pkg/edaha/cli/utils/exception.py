import sys

from rich.traceback import install as rich_install

from ...core.exceptions import EdahaError

default_exception_hook = sys.excepthook


def one_line_exception_hook(exc_type, exc_value, exc_traceback):
    """Library errors print their message; anything else keeps its type name."""
    if issubclass(exc_type, EdahaError):
        print(f"error: {exc_value}", file=sys.stderr)
    else:
        print(f"{exc_type.__name__}: {exc_value}", file=sys.stderr)


def setup_exceptions_handler(
    trace: bool | None,
    rich_traceback: bool | None,
    rich_traceback_theme: str,
):
    """One-line errors by default; full tracebacks with ``--trace``."""
    if not trace:
        sys.excepthook = one_line_exception_hook
        return
    sys.excepthook = default_exception_hook
    if rich_traceback:
        rich_install(show_locals=True, theme=rich_traceback_theme)
