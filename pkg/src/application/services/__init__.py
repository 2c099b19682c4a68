"""
Application Services: Use cases and business logic orchestration.

These services coordinate between the core physics and infrastructure layers.
"""

from src.application.services.simulation_service import (
    SimulationService,
    SweepResult,
    SweepRow,
    emit_csv,
    emit_trajectory_csv,
)

__all__ = ["SimulationService", "SweepResult", "SweepRow", "emit_csv", "emit_trajectory_csv"]
