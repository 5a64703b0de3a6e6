#!/usr/bin/env python3
"""
Logging Helper
Centralized logging configuration shared by the engine, the fuzzer and the CLI.
"""

import logging
import sys
from typing import Optional

# Custom log level for checker outcomes
VERDICT_LEVEL = 25  # Between INFO (20) and WARNING (30)
logging.addLevelName(VERDICT_LEVEL, "VERDICT")


def verdict(self, message, *args, **kwargs):
    """Log a checker outcome."""
    if self.isEnabledFor(VERDICT_LEVEL):
        self._log(VERDICT_LEVEL, message, args, **kwargs)


# Add the verdict method to Logger class
logging.Logger.verdict = verdict

# Level given to loggers created from now on; changed by set_global_level
_default_level = logging.INFO


def setup_logger(name: str, level: Optional[int] = None, include_verdicts: bool = True) -> logging.Logger:
    """
    Set up a logger with consistent formatting across all components.

    Reports go to stdout, so log records are written to stderr.

    Args:
        name: The name of the logger (usually __name__ from the calling module)
        level: The logging level (default: the current global level)
        include_verdicts: Whether VERDICT-level records are shown (default: True)

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)

    # Avoid adding handlers multiple times
    if logger.handlers:
        return logger

    logger.setLevel(level if level is not None else _default_level)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG)

    if not include_verdicts:
        def filter_verdicts(record):
            return record.levelno != VERDICT_LEVEL
        console_handler.addFilter(filter_verdicts)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%H:%M:%S'
    )
    console_handler.setFormatter(formatter)

    logger.addHandler(console_handler)

    # Prevent propagation to root logger to avoid duplicate messages
    logger.propagate = False

    return logger


def get_cli_logger(name: str) -> logging.Logger:
    """
    Get a logger for the command-line front end, including VERDICT records.

    Args:
        name: The name of the logger (usually __name__ from the calling module)

    Returns:
        Configured logger instance with verdict logging enabled
    """
    return setup_logger(name, include_verdicts=True)


def get_backend_logger(name: str) -> logging.Logger:
    """
    Get a logger for library components that excludes VERDICT records.

    Args:
        name: The name of the logger (usually __name__ from the calling module)

    Returns:
        Configured logger instance without verdict logging
    """
    return setup_logger(name, include_verdicts=False)


def set_global_level(level: int) -> None:
    """Apply a level to every logger this helper has configured."""
    global _default_level
    _default_level = level
    for logger in logging.Logger.manager.loggerDict.values():
        if isinstance(logger, logging.Logger) and logger.handlers and not logger.propagate:
            logger.setLevel(level)
