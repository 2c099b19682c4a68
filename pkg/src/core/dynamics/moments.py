"""
Second-Moment Dynamics of two dissipatively coupled spin ensembles.

The six second moments obey linear ODEs that share a single decay constant
K = gamma_tilde + d gamma P2. Each variance is driven by
(N/4)[gamma_tilde + d gamma P2^2 (mu^2 + nu^2)], the Z (Y) cross moment by
+(-)(N/2) mu nu d gamma P2^2. Means of J^Y and J^Z are identically zero.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from src.domain.entities import Axis, Branch, MomentDerivatives, MomentState
from src.domain.exceptions import NumericalFailureError, ParameterDomainError
from src.domain.model import ModelParams, p2_steady


def relaxation_rate(p: ModelParams, p2: Optional[float] = None) -> float:
    """Shared decay constant gamma_tilde + d gamma P2 of all six moments."""
    pop = p2_steady(p) if p2 is None else p2
    return p.rates.gamma_tilde + p.rates.d * p.rates.gamma * pop


def variance_source(p: ModelParams, p2: Optional[float] = None) -> float:
    """gamma_tilde + d gamma P2^2 (mu^2 + nu^2), without the N/4 prefactor."""
    pop = p2_steady(p) if p2 is None else p2
    return p.rates.gamma_tilde + p.rates.d * p.rates.gamma * pop * pop * p.squeeze.weight


def correlation_source(p: ModelParams, p2: Optional[float] = None) -> float:
    """mu nu d gamma P2^2, without the N/2 prefactor."""
    pop = p2_steady(p) if p2 is None else p2
    return p.squeeze.correlation * p.rates.d * p.rates.gamma * pop * pop


def linear_system(p: ModelParams, p2: float) -> tuple[float, np.ndarray]:
    """
    Coefficients of dy/dt = -K y + b for the moment vector y.

    Returns:
        (K, b) with b in MOMENT_FIELDS order
    """
    decay = relaxation_rate(p, p2)
    variance_drive = 0.25 * p.N * variance_source(p, p2)
    correlation_drive = 0.5 * p.N * correlation_source(p, p2)
    drive = np.array(
        [
            variance_drive,
            variance_drive,
            variance_drive,
            variance_drive,
            correlation_drive,
            -correlation_drive,
        ]
    )
    return decay, drive


def coherent_initial(N: float) -> MomentState:
    """
    Coherent spin state with shot-noise variances N/4 and full polarization.

    Args:
        N: Atom number per ensemble

    Returns:
        MomentState with uncorrelated ensembles and mean spins +-N/2

    Raises:
        ParameterDomainError: If N <= 0
    """
    if not math.isfinite(N) or N <= 0.0:
        raise ParameterDomainError(f"N must be > 0, got {N}")
    shot_noise = 0.25 * N
    return MomentState(
        v_az=shot_noise,
        v_ay=shot_noise,
        v_bz=shot_noise,
        v_by=shot_noise,
        c_zz=0.0,
        c_yy=0.0,
        p2=1.0,
        mean_x_a=0.5 * N,
        mean_x_b=-0.5 * N,
    )


def moment_derivatives(s: MomentState, p: ModelParams) -> MomentDerivatives:
    """
    Right-hand side of the moment ODEs, evaluated with P2 taken from the state.

    Args:
        s: Current moments
        p: Model parameters

    Returns:
        Time derivatives of the six moments; dp2/dt is 0 (P2 is frozen)
    """
    decay, drive = linear_system(p, s.p2)
    rates = -decay * s.moments() + drive
    return MomentDerivatives(*(float(r) for r in rates), p2=0.0)


def conditional_variance_derivatives(
    val: float,
    g: float,
    axis: Axis,
    branch: Branch,
    p: ModelParams,
    p2: Optional[float] = None,
) -> float:
    """
    Rate of change of the conditional variance Delta^2(J_A +/- |g| J_B).

    The Z axis carries the correlation term with the branch sign, the Y axis
    with the opposite sign.

    Args:
        val: Current conditional variance (>= 0)
        g: Gain magnitude
        axis: Spin component
        branch: Sign in J_A +/- |g| J_B
        p: Model parameters
        p2: Population override (defaults to the steady value)

    Returns:
        d/dt of the conditional variance
    """
    if val < 0.0:
        raise ParameterDomainError(f"conditional variance must be >= 0, got {val}")
    pop = p2_steady(p) if p2 is None else p2
    gain = abs(g)
    axis_sign = 1.0 if axis is Axis.Z else -1.0
    return (
        -relaxation_rate(p, pop) * val
        + 0.25 * p.N * (1.0 + gain * gain) * variance_source(p, pop)
        + axis_sign * branch.sign * p.N * gain * correlation_source(p, pop)
    )


def conditional_variance_steady(g: float, axis: Axis, branch: Branch, p: ModelParams) -> float:
    """Fixed point of conditional_variance_derivatives."""
    pop = p2_steady(p)
    decay = _checked_decay(p, pop)
    gain = abs(g)
    axis_sign = 1.0 if axis is Axis.Z else -1.0
    numerator = 0.25 * p.N * (1.0 + gain * gain) * variance_source(
        p, pop
    ) + axis_sign * branch.sign * p.N * gain * correlation_source(p, pop)
    return numerator / decay


def mean_spin_steady(p: ModelParams) -> float:
    """Steady-state |<J^X>| = (N/2) P2,inf."""
    return 0.5 * p.N * p2_steady(p)


def steady_state(p: ModelParams) -> MomentState:
    """
    Analytic steady state of the moment ODEs.

    Args:
        p: Model parameters

    Returns:
        MomentState at t -> infinity

    Raises:
        NumericalFailureError: If the decay constant vanishes
    """
    pop = p2_steady(p)
    decay = _checked_decay(p, pop)
    variance = 0.25 * p.N * variance_source(p, pop) / decay
    correlation = 0.5 * p.N * correlation_source(p, pop) / decay
    mean_x = mean_spin_steady(p)
    return MomentState(
        v_az=variance,
        v_ay=variance,
        v_bz=variance,
        v_by=variance,
        c_zz=correlation,
        c_yy=-correlation,
        p2=pop,
        mean_x_a=mean_x,
        mean_x_b=-mean_x,
    )


def _checked_decay(p: ModelParams, p2: float) -> float:
    decay = relaxation_rate(p, p2)
    if not math.isfinite(decay) or decay <= 0.0:
        raise NumericalFailureError(f"degenerate relaxation rate {decay}: no steady state")
    return decay
