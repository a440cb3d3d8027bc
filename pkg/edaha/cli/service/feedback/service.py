import logging
from contextlib import contextmanager
from typing import Optional

from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn, TimeElapsedColumn
from rich.table import Table

from ....core.config import AppConfig
from ....core.report import Report

logger = logging.getLogger(__name__)

console = Console()


class FeedbackService:
    """Centralized terminal output for the verification commands."""

    def __init__(self, config: AppConfig):
        self.app_config = config

    def _icon(self, icon: str) -> str:
        return f"{icon} " if self.app_config.general.icons else ""

    def success(self, message: str, details: Optional[str] = None) -> None:
        """Show a success message with optional details."""
        main_msg = f"[bold green]{self._icon('✅')}{message}[/bold green]"
        if details:
            console.print(f"{main_msg}\n[dim]{details}[/dim]")
        else:
            console.print(main_msg)

    def error(self, message: str, details: Optional[str] = None) -> None:
        """Show an error message with optional details."""
        main_msg = f"[bold red]{self._icon('❌')}Error: {message}[/bold red]"
        if details:
            console.print(f"{main_msg}\n[dim]{details}[/dim]")
        else:
            console.print(main_msg)

    def warning(self, message: str, details: Optional[str] = None) -> None:
        """Show a warning message with optional details."""
        main_msg = f"[bold yellow]{self._icon('⚠️')}Warning: {message}[/bold yellow]"
        if details:
            console.print(f"{main_msg}\n[dim]{details}[/dim]")
        else:
            console.print(main_msg)

    def info(self, message: str, details: Optional[str] = None) -> None:
        """Show an informational message with optional details."""
        main_msg = f"[bold blue]{message}[/bold blue]"
        if details:
            console.print(f"{main_msg}\n[dim]{details}[/dim]")
        else:
            console.print(main_msg)

    @contextmanager
    def progress(self, message: str, transient: bool = True):
        """Spinner shown while a suite runs."""
        with Progress(
            SpinnerColumn(),
            TextColumn(f"[cyan]{message}..."),
            TimeElapsedColumn(),
            transient=transient,
            console=console,
        ) as progress:
            task_id = progress.add_task("", total=None)
            yield task_id, progress

    def report(self, report: Report) -> None:
        """One table row per check, then a one-line verdict."""
        table = Table(title=f"{report.suite}", title_justify="left")
        table.add_column("check", overflow="fold")
        table.add_column("tier")
        table.add_column("residual", justify="right")
        table.add_column("ms", justify="right")
        table.add_column("", justify="center")
        for check in report.checks:
            mark = "[green]pass[/green]" if check.passed else "[red]FAIL[/red]"
            residual = f"{check.residual:.2e}" if check.residual else "0"
            table.add_row(check.id, check.tier, residual, f"{check.ms:.0f}", mark)
        console.print(table)

        failures = report.failures
        if not failures:
            self.success(f"{report.suite}: all {len(report.checks)} checks passed")
            return
        self.error(
            f"{report.suite}: {len(failures)} of {len(report.checks)} checks failed",
            "\n".join(f"{c.id}: {c.detail}" for c in failures if c.detail) or None,
        )
