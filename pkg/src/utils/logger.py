"""
Logging configuration for the Hermitian hull toolkit
Provides structured logging across the application.
"""

import logging
import os
from typing import Optional

ROOT_LOGGER_NAME = "eaqmds"

def setup_logger(name: Optional[str] = None, log_level: Optional[str] = None,
                 log_file: Optional[str] = None, log_directory: str = "logs") -> logging.Logger:
    """
    Set up the package logger with proper formatting and optional file output.

    Handlers live on the ``eaqmds`` logger; a ``name`` returns a child of it so
    that every module shares one level and one set of handlers.

    Args:
        name: Child logger name, usually the calling module's ``__name__``
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL);
            leaves the current level alone when None
        log_file: File name inside ``log_directory``; no file handler when None
        log_directory: Directory for the log file

    Returns:
        Configured logger instance
    """

    root = logging.getLogger(ROOT_LOGGER_NAME)

    if log_level:
        root.setLevel(getattr(logging, log_level.upper(), logging.INFO))
    elif root.level == logging.NOTSET:
        root.setLevel(logging.INFO)

    detailed_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
    )

    simple_formatter = logging.Formatter(
        '%(asctime)s - %(levelname)s - %(message)s'
    )

    # Avoid duplicate handlers; the console handler writes to stderr
    if not any(type(h) is logging.StreamHandler for h in root.handlers):
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(simple_formatter)
        root.addHandler(console_handler)

    if log_file and not any(isinstance(h, logging.FileHandler) for h in root.handlers):
        try:
            os.makedirs(log_directory, exist_ok=True)

            file_handler = logging.FileHandler(os.path.join(log_directory, log_file))
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(detailed_formatter)
            root.addHandler(file_handler)

        except OSError as e:
            root.warning(f"Could not set up file logging: {e}")

    if not name or name == ROOT_LOGGER_NAME:
        return root
    return root.getChild(name)


def configure_logging(config) -> logging.Logger:
    """Apply the logging section of a Config instance to the package logger."""
    return setup_logger(
        log_level="DEBUG" if config.debug else config.log_level,
        log_file=config.log_file if config.log_to_file else None,
        log_directory=config.log_directory,
    )
