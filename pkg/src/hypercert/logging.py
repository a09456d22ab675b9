"""Logging configuration for hypercert."""

import logging
import sys
from typing import Optional

ROOT_LOGGER = "hypercert"


def setup_logging(verbose: bool = False) -> None:
    """Set up logging configuration.

    Calling this more than once only adjusts the level; the console handler
    is installed a single time.

    Args:
        verbose: Whether to enable debug logging
    """
    logger = logging.getLogger(ROOT_LOGGER)
    level = logging.DEBUG if verbose else logging.INFO
    logger.setLevel(level)

    for handler in logger.handlers:
        if getattr(handler, "_hypercert_console", False):
            handler.setLevel(level)
            return

    console_handler = logging.StreamHandler(sys.stdout)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter("%(message)s"))
    console_handler._hypercert_console = True  # type: ignore[attr-defined]
    logger.addHandler(console_handler)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Get a logger instance.

    Args:
        name: Optional name for the logger (defaults to hypercert)

    Returns:
        Logger instance
    """
    return logging.getLogger(name or ROOT_LOGGER)
