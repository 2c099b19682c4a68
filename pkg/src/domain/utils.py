"""
Domain Utilities: Helper functions for domain operations.

These are pure functions for the causality requirements of the local
measurement scheme.
"""

from __future__ import annotations

import math

from src.domain.constants import SPEED_OF_LIGHT_M_PER_S
from src.domain.exceptions import ParameterDomainError


def causal_separation(delta_t: float) -> float:
    """
    Minimum ensemble separation for space-like separated measurements.

    Args:
        delta_t: Duration of one verifying-pulse measurement in seconds

    Returns:
        Separation D = c * delta_t in meters

    Raises:
        ParameterDomainError: If delta_t is negative or not finite
    """
    if not math.isfinite(delta_t) or delta_t < 0.0:
        raise ParameterDomainError(f"delta_t must be finite and >= 0, got {delta_t}")
    return SPEED_OF_LIGHT_M_PER_S * delta_t


def entanglement_outlives_measurement(lifetime: float, delta_t: float) -> bool:
    """
    Check that the entanglement lifetime exceeds the measurement duration.

    Args:
        lifetime: Entanglement lifetime in seconds
        delta_t: Measurement duration in seconds

    Returns:
        True if lifetime > delta_t
    """
    if lifetime < 0.0 or delta_t < 0.0:
        raise ParameterDomainError("lifetime and delta_t must be >= 0")
    return lifetime > delta_t
