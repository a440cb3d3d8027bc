import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path

from ...core.constants import LOG_FILE

root_logger = logging.getLogger()
logger = logging.getLogger(__name__)

FILE_FORMAT = "%(asctime)s - %(threadName)s - %(levelname)-8s - %(name)s:%(lineno)d - %(message)s"


def setup_logging(log: bool | None, log_file: Path = LOG_FILE) -> None:
    """
    Every run appends DEBUG records to the rotating log file. ``--log`` mirrors
    INFO and above to the terminal through rich, which is where the per-check
    residuals of a long suite show up while it runs.
    """
    root_logger.setLevel(logging.DEBUG)
    if not _has_file_handler(log_file):
        handler = RotatingFileHandler(log_file, maxBytes=10 * 1024 * 1024, backupCount=5, encoding="utf-8")
        handler.setLevel(logging.DEBUG)
        handler.setFormatter(logging.Formatter(FILE_FORMAT))
        root_logger.addHandler(handler)
    if log:
        from rich.logging import RichHandler

        console_handler = RichHandler(show_path=False)
        console_handler.setLevel(logging.INFO)
        root_logger.addHandler(console_handler)
        logger.info("Logging to the terminal")


def _has_file_handler(log_file: Path) -> bool:
    return any(
        isinstance(handler, RotatingFileHandler) and Path(handler.baseFilename) == log_file
        for handler in root_logger.handlers
    )
