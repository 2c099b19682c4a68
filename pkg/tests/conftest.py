"""
Pytest configuration and fixtures.

This file provides shared fixtures for all tests.
"""

from pathlib import Path

import pytest

from src.core.dynamics import steady_state
from src.domain.entities import MomentState
from src.domain.model import ModelParams
from src.infrastructure.logging_config import setup_logging


@pytest.fixture(scope="session", autouse=True)
def setup_test_logging() -> None:
    """Setup logging for tests."""
    setup_logging(log_level="WARNING")  # Reduce noise in tests


@pytest.fixture
def params_z2() -> ModelParams:
    """Z = 2, d = 30, pure radiative dephasing, N = 1e6."""
    return ModelParams.from_z(2.0, d=30.0)


@pytest.fixture
def steady_z2(params_z2: ModelParams) -> MomentState:
    """Steady state at Z = 2."""
    return steady_state(params_z2)


@pytest.fixture
def params_unsqueezed() -> ModelParams:
    """Z = 1 (nu = 0): no two-mode correlation source."""
    return ModelParams.from_z(1.0, d=30.0)


@pytest.fixture
def test_output_dir(tmp_path: Path) -> Path:
    """Create a test output directory."""
    output_dir = tmp_path / "output"
    output_dir.mkdir(parents=True)
    return output_dir
