"""
Inference gain selection: analytic steady-state gains, state-level optimal
gains and numeric optimisation of the gain-weighted entanglement witness.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import minimize

from src.core.dynamics.moments import correlation_source, variance_source
from src.core.witnesses.criteria import gain_entanglement, unit_gains
from src.domain.entities import Axis, GainPair, MomentState, Side
from src.domain.exceptions import NumericalFailureError
from src.domain.model import ModelParams
from src.infrastructure.logger import get_logger

logger = get_logger(__name__)


def optimal_gain(p: ModelParams) -> GainPair:
    """
    Steady-state gains minimizing both inference variances.

    |g| = mu nu d gamma P2^2 / ([gamma_tilde + d gamma P2^2 (mu^2 + nu^2)] / 2),
    signed so that g_z > 0 exploits the positive Z correlation and g_y = -g_z.

    Args:
        p: Model parameters

    Returns:
        GainPair with g_y = -g_z

    Raises:
        NumericalFailureError: If the denominator vanishes
    """
    denominator = 0.5 * variance_source(p)
    if not math.isfinite(denominator) or denominator <= 0.0:
        raise NumericalFailureError(f"degenerate gain denominator {denominator}")
    magnitude = correlation_source(p) / denominator
    if magnitude == 0.0:
        return GainPair(g_y=0.0, g_z=0.0)
    return GainPair(g_y=-magnitude, g_z=magnitude)


def state_optimal_gain(s: MomentState, axis: Axis, side: Side = Side.A_GIVEN_B) -> float:
    """Minimizer c / v_measured of the inference variance on one axis."""
    measured = s.variance(axis, "B" if side is Side.A_GIVEN_B else "A")
    if measured <= 0.0:
        raise NumericalFailureError(f"zero variance of the measured {axis.value} component")
    return s.correlation(axis) / measured


def state_optimal_gains(s: MomentState, side: Side = Side.A_GIVEN_B) -> GainPair:
    """Optimal gains of one inference direction derived from the state itself."""
    return GainPair(
        g_y=state_optimal_gain(s, Axis.Y, side),
        g_z=state_optimal_gain(s, Axis.Z, side),
    )


def numeric_entanglement_gains(s: MomentState) -> GainPair:
    """
    Minimize the gain-weighted entanglement witness over (g_y, g_z).

    Used for states without A <-> B symmetry, where unit gains need not be optimal.
    """
    start = unit_gains(s)

    def objective(x: np.ndarray) -> float:
        return gain_entanglement(s, GainPair(g_y=float(x[0]), g_z=float(x[1])))

    result = minimize(
        objective,
        x0=np.array([start.g_y, start.g_z]),
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 4000},
    )
    if not result.success:
        logger.warning(f"Gain optimisation did not converge: {result.message}")
    best = GainPair(g_y=float(result.x[0]), g_z=float(result.x[1]))
    if gain_entanglement(s, start) <= gain_entanglement(s, best):
        return start
    return best
