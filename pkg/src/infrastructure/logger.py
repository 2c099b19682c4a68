"""
Logger Module: Convenience module for getting loggers.

This provides a simple interface for getting loggers throughout the application.
"""

import inspect
import logging
from typing import Optional


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger instance.

    Args:
        name: Logger name (defaults to caller's module name)

    Returns:
        Logger instance
    """
    if name is None:
        frame = inspect.currentframe()
        caller = frame.f_back if frame is not None else None
        name = caller.f_globals.get("__name__", "root") if caller is not None else "root"

    return logging.getLogger(name)
