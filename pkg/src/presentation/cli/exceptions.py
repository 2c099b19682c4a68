"""
CLI Exceptions: Custom exceptions for the command-line layer.

These exceptions carry the process exit code reported to the shell.
"""

from typing import Any, Dict, Optional

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_RUN_FAILURE = 2


class CLIException(Exception):
    """Base exception for CLI layer."""

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_RUN_FAILURE,
        detail: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.exit_code = exit_code
        self.detail = detail or {}
        super().__init__(self.message)


class ConfigError(CLIException):
    """Raised when the config file is malformed or invalid."""

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message, exit_code=EXIT_CONFIG_ERROR, detail=detail)


class RunFailure(CLIException):
    """Raised when a run fails numerically or cannot write its output."""

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message, exit_code=EXIT_RUN_FAILURE, detail=detail)
