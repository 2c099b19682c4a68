"""
Fixed-step classical Runge-Kutta integration of the moment ODEs.

P2 is frozen at its steady-state value for the whole run and the mean spins
are pinned to +-(N/2) P2,inf; only the six second moments evolve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from src.core.dynamics.moments import linear_system, mean_spin_steady, steady_state
from src.domain.constants import PSD_RELATIVE_TOLERANCE, STABILITY_GUARD
from src.domain.entities import MomentState
from src.domain.exceptions import NumericalFailureError, ParameterDomainError, StabilityError
from src.domain.model import ModelParams, p2_steady
from src.infrastructure.logger import get_logger

logger = get_logger(__name__)

Derivative = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution of the moment ODEs."""

    times: np.ndarray
    moments: np.ndarray  # shape (len(times), 6), MOMENT_FIELDS order
    p2: float
    mean_x_a: float
    mean_x_b: float

    def __post_init__(self) -> None:
        """Validate shapes and strictly increasing times."""
        if self.moments.shape != (len(self.times), 6):
            raise ValueError(f"moments shape {self.moments.shape} does not match times")
        if len(self.times) > 1 and not np.all(np.diff(self.times) > 0.0):
            raise ValueError("Trajectory times must be strictly increasing")

    def __len__(self) -> int:
        return len(self.times)

    def state(self, index: int) -> MomentState:
        """MomentState at one recorded time."""
        return MomentState.from_moments(
            self.moments[index], self.p2, self.mean_x_a, self.mean_x_b
        )

    @property
    def states(self) -> List[MomentState]:
        return [self.state(i) for i in range(len(self))]

    @property
    def final_state(self) -> MomentState:
        return self.state(len(self) - 1)


def rk4_step(f: Derivative, y: np.ndarray, h: float) -> np.ndarray:
    """Single classical fourth-order Runge-Kutta step of a time-invariant ODE."""
    k1 = f(y)
    k2 = f(y + 0.5 * h * k1)
    k3 = f(y + 0.5 * h * k2)
    k4 = f(y + h * k3)
    return y + h * (k1 + 2.0 * (k2 + k3) + k4) / 6.0


def max_stable_step(p: ModelParams) -> float:
    """Largest step accepted by the guard h (gamma_tilde + d gamma) <= 0.1."""
    stiffness = p.rates.gamma_tilde + p.rates.d * p.rates.gamma
    if stiffness <= 0.0:
        raise NumericalFailureError("zero total rate: the moments do not evolve")
    return STABILITY_GUARD / stiffness


def exact_state(init: MomentState, p: ModelParams, t: float) -> MomentState:
    """Closed-form exponential relaxation y(t) = y_inf + (y_0 - y_inf) exp(-K t)."""
    target = steady_state(p)
    decay, _ = linear_system(p, target.p2)
    moments = target.moments() + (init.moments() - target.moments()) * math.exp(-decay * t)
    sign = 1.0 if init.mean_x_a >= 0.0 else -1.0
    return MomentState.from_moments(
        moments, target.p2, sign * target.mean_x_a, -sign * target.mean_x_a
    )


def integrate(
    init: MomentState,
    p: ModelParams,
    t_end: float,
    h: Optional[float] = None,
    record_every: int = 1,
) -> Trajectory:
    """
    Integrate the moment ODEs from init to t_end with fixed RK4 steps.

    Args:
        init: Initial moments
        p: Model parameters
        t_end: Final dimensionless time gamma * t (> 0)
        h: Step size; defaults to the largest stable step
        record_every: Keep every n-th step (the final step is always kept)

    Returns:
        Trajectory including t = 0

    Raises:
        StabilityError: If h exceeds the stability guard
        NumericalFailureError: On non-finite or non-PSD intermediate states
    """
    if not math.isfinite(t_end) or t_end <= 0.0:
        raise ParameterDomainError(f"t_end must be > 0, got {t_end}")
    if record_every < 1:
        raise ParameterDomainError(f"record_every must be >= 1, got {record_every}")

    limit = max_stable_step(p)
    if h is None:
        h = limit
    elif not h > 0.0:
        raise ParameterDomainError(f"step must be > 0, got {h}")
    elif h > limit * (1.0 + 1e-12):
        raise StabilityError(f"step {h} exceeds stability limit {limit:.6g}")

    n_steps = max(1, math.ceil(t_end / h - 1e-9))
    step = t_end / n_steps

    p2 = p2_steady(p)
    mean_x = mean_spin_steady(p)
    sign = 1.0 if init.mean_x_a >= 0.0 else -1.0
    decay, drive = linear_system(p, p2)

    def rhs(y: np.ndarray) -> np.ndarray:
        return -decay * y + drive

    logger.debug(
        f"Integrating to t={t_end} in {n_steps} steps of {step:.3e} (decay rate {decay:.6g})"
    )

    times = [0.0]
    recorded = [init.moments()]
    y = init.moments()
    for i in range(1, n_steps + 1):
        y = rk4_step(rhs, y, step)
        _check_moments(y, i * step)
        if i % record_every == 0 or i == n_steps:
            times.append(i * step)
            recorded.append(y.copy())

    return Trajectory(
        times=np.array(times),
        moments=np.array(recorded),
        p2=p2,
        mean_x_a=sign * mean_x,
        mean_x_b=-sign * mean_x,
    )


def _check_moments(y: np.ndarray, t: float) -> None:
    if not np.all(np.isfinite(y)):
        raise NumericalFailureError(f"non-finite moments at t={t}")
    v_az, v_ay, v_bz, v_by, c_zz, c_yy = y
    if min(v_az, v_ay, v_bz, v_by) < 0.0:
        raise NumericalFailureError(f"negative variance at t={t}")
    scale = max(v_az, v_ay, v_bz, v_by, 1.0)
    slack = PSD_RELATIVE_TOLERANCE * scale
    if abs(c_zz) > math.sqrt(v_az * v_bz) + slack or abs(c_yy) > math.sqrt(v_ay * v_by) + slack:
        raise NumericalFailureError(f"covariance lost positive semidefiniteness at t={t}")
