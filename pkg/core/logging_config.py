"""
Logging for the monomial quiver pipeline.

All module loggers hang off the "quiverpipe" namespace. Log records go to
stderr and, on request, to a file; stdout is reserved for artifacts (JSON,
DOT, tables) so that repeated runs print identical bytes.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

ROOT_LOGGER_NAME = "quiverpipe"

DEFAULT_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
DEFAULT_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
SIMPLE_FORMAT = "%(levelname)s: %(message)s"


def setup_logging(
    level: int = logging.INFO,
    console: bool = True,
    simple_console: bool = False,
    log_file: Optional[Path] = None,
) -> logging.Logger:
    """
    Install handlers on the quiverpipe root logger, replacing earlier ones.

    Args:
        level: Threshold for the logger and every handler
        console: Log to stderr
        simple_console: Level and message only on stderr (the CLI default)
        log_file: Also append timestamped records to this file

    Returns:
        The quiverpipe root logger
    """
    root_logger = logging.getLogger(ROOT_LOGGER_NAME)
    for handler in list(root_logger.handlers):
        root_logger.removeHandler(handler)
        handler.close()
    root_logger.setLevel(level)

    if console:
        stream = logging.StreamHandler(sys.stderr)
        stream.setLevel(level)
        stream.setFormatter(
            logging.Formatter(SIMPLE_FORMAT)
            if simple_console
            else logging.Formatter(DEFAULT_FORMAT, datefmt=DEFAULT_DATE_FORMAT)
        )
        root_logger.addHandler(stream)

    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(DEFAULT_FORMAT, datefmt=DEFAULT_DATE_FORMAT))
        root_logger.addHandler(file_handler)

    return root_logger


def get_logger(name: str) -> logging.Logger:
    """Child of the quiverpipe logger for a module (pass __name__)."""
    if name.startswith(f"{ROOT_LOGGER_NAME}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")
