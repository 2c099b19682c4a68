"""Moment Dynamics: second-moment ODEs, analytic steady state and RK4 integration."""

from src.core.dynamics.integrator import Trajectory, exact_state, integrate, max_stable_step
from src.core.dynamics.moments import (
    coherent_initial,
    conditional_variance_derivatives,
    conditional_variance_steady,
    mean_spin_steady,
    moment_derivatives,
    relaxation_rate,
    steady_state,
)

__all__ = [
    "Trajectory",
    "coherent_initial",
    "conditional_variance_derivatives",
    "conditional_variance_steady",
    "exact_state",
    "integrate",
    "max_stable_step",
    "mean_spin_steady",
    "moment_derivatives",
    "relaxation_rate",
    "steady_state",
]
