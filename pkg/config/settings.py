"""
Application Settings: Environment-based runtime configuration.

This module provides centralized configuration management using Pydantic Settings.
Only runtime knobs live here (logging and parallelism); the physics of a run is
configured by the sweep config file.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from SPINEPR_* environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="SPINEPR_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging
    log_level: str = Field("INFO", description="Logging level")
    log_file: Optional[str] = Field(None, description="Log file path")
    log_config_file: Optional[str] = Field(
        "config/logging.yaml", description="Logging config YAML file; takes precedence when present"
    )

    # Execution
    workers: int = Field(1, ge=1, description="Threads for sweep points and sample batches")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of {valid_levels}")
        return v.upper()

    @property
    def log_file_path(self) -> Optional[Path]:
        """Get log file as Path."""
        return Path(self.log_file) if self.log_file else None

    @property
    def log_config_path(self) -> Optional[Path]:
        """Get logging config file as Path."""
        return Path(self.log_config_file) if self.log_config_file else None


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get application settings (singleton pattern).

    Returns:
        Settings instance
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings
