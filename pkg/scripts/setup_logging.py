#!/usr/bin/env python
"""
Setup logging for the application.

This script initializes logging from the SPINEPR_* settings and reports where
log records go.
"""

from config.settings import get_settings
from src.infrastructure.logging_config import setup_logging


def main() -> None:
    """Setup logging configuration."""
    settings = get_settings()
    config_file = settings.log_config_path

    if config_file and config_file.exists():
        setup_logging(config_file=config_file)
        print(f"Logging configured from {config_file}")
    else:
        setup_logging(log_level=settings.log_level, log_file=settings.log_file_path)
        target = settings.log_file_path or "stderr only"
        print(f"Logging configured (default, level {settings.log_level}). Log file: {target}")


if __name__ == "__main__":
    main()
