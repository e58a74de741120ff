"""Logging configuration for sln-sheaves."""

import logging
import sys
import time
from contextlib import contextmanager
from typing import Iterator, Optional

from src.config import get_settings

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
HANDLER_NAME = "sln_sheaves.stderr"


def _resolve_level(level: str) -> int:
    name = level.upper()
    if name not in LOG_LEVELS:
        raise ValueError(f"Unknown log level '{level}' (expected one of {', '.join(LOG_LEVELS)})")
    return getattr(logging, name)


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """
    Configure and return the sln_sheaves logger.

    Tables go to stdout, so records are written to stderr. Calling this again
    only changes the level of the existing handler.

    Args:
        level: Override log level (default: from settings)

    Returns:
        Configured logger instance
    """
    numeric = _resolve_level(level or get_settings().log_level)

    logger = logging.getLogger("sln_sheaves")
    logger.setLevel(numeric)
    logger.propagate = False

    for handler in logger.handlers:
        if handler.get_name() == HANDLER_NAME:
            handler.setLevel(numeric)
            return logger

    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(HANDLER_NAME)
    handler.setLevel(numeric)
    handler.setFormatter(
        logging.Formatter(
            fmt="%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
    )
    logger.addHandler(handler)
    return logger


def get_logger(name: str) -> logging.Logger:
    """Child logger `sln_sheaves.<name>` for one module."""
    return logging.getLogger(f"sln_sheaves.{name}")


@contextmanager
def timed(logger: logging.Logger, label: str) -> Iterator[None]:
    """Log the wall time of an enumeration or suite at DEBUG."""
    start = time.perf_counter()
    try:
        yield
    finally:
        logger.debug(f"{label}: {time.perf_counter() - start:.3f}s")


logger = setup_logging()
