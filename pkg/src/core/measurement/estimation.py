"""
Witness estimation from finite samples of local readouts.

Gains are estimated by least-squares regression of the inferred ensemble's
estimates on the measuring ensemble's, and inference variances are taken
from the residuals. Mean spins are not sampled: they come from the model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from sklearn.linear_model import LinearRegression

from src.core.dynamics.moments import mean_spin_steady
from src.core.measurement.readout import LocalReadout
from src.core.witnesses.criteria import epr_parameter
from src.domain.constants import (
    ENTANGLEMENT_THRESHOLD,
    EPR_THRESHOLD,
    EPR_VIA_SUM_THRESHOLD,
    MIN_ESTIMATION_SAMPLES,
)
from src.domain.entities import Axis, GainPair, Side, WitnessFlags, WitnessReport
from src.domain.exceptions import EstimationError
from src.domain.model import ModelParams


@dataclass(frozen=True)
class StandardErrors:
    """One-sigma standard errors of an estimated WitnessReport."""

    g_y: float
    g_z: float
    var_inf_z: float
    var_inf_y: float
    delta_ent: float
    delta_g_ent: float
    e_epr_ab: float
    e_epr_ba: float


@dataclass(frozen=True)
class EstimatedWitnesses:
    """Witnesses estimated from m samples, with their standard errors."""

    report: WitnessReport
    errors: StandardErrors
    m: int


@dataclass(frozen=True)
class _AxisFit:
    gain: float
    gain_se: float
    variance: float
    variance_se: float


def _variance_se(variance: float, m: int) -> float:
    return variance * math.sqrt(2.0 / (m - 1))


def _fit_axis(inferred: np.ndarray, measured: np.ndarray, gain: Optional[float]) -> _AxisFit:
    """Regress (or apply a fixed gain) and measure the residual variance."""
    m = inferred.shape[0]
    measured_variance = float(np.var(measured, ddof=1))
    if gain is None:
        if measured_variance <= 0.0:
            raise EstimationError("measured readout has zero variance: gain is not estimable")
        model = LinearRegression().fit(measured.reshape(-1, 1), inferred)
        gain = float(model.coef_[0])
        residual = inferred - model.predict(measured.reshape(-1, 1))
        variance = float(np.sum(residual * residual) / (m - 2))
        gain_se = math.sqrt(variance / ((m - 1) * measured_variance))
    else:
        residual = inferred - gain * measured
        variance = float(np.var(residual, ddof=1))
        gain_se = 0.0
    return _AxisFit(gain, gain_se, variance, _variance_se(variance, m))


def _product_se(value: float, fit_z: _AxisFit, fit_y: _AxisFit) -> float:
    """Delta-method error of sqrt(var_z var_y) / const."""
    terms = [
        (fit.variance_se / fit.variance) ** 2 for fit in (fit_z, fit_y) if fit.variance > 0.0
    ]
    return 0.5 * value * math.sqrt(sum(terms))


def _sum_variance(readout: LocalReadout, axis: Axis) -> Tuple[float, float]:
    """Reduced-fluctuation sum variance Delta^2(j_a +/- j_b) and its error."""
    j_a, j_b = readout.estimate(axis, "A"), readout.estimate(axis, "B")
    sign = -1.0 if float(np.mean(j_a * j_b)) >= 0.0 else 1.0
    variance = float(np.var(j_a + sign * j_b, ddof=1))
    return variance, _variance_se(variance, readout.m)


def estimate_witnesses(
    readout: LocalReadout,
    p: ModelParams,
    gains: Optional[GainPair] = None,
) -> EstimatedWitnesses:
    """
    Estimate gains, inference variances and witnesses from local readouts.

    Args:
        readout: Local readout of both axes
        p: Model parameters supplying the mean spins
        gains: Fixed A|B gains; regression is used when omitted

    Returns:
        EstimatedWitnesses with O(1/sqrt(m)) standard errors

    Raises:
        EstimationError: On too few samples, a degenerate regressor, or a
            readout that carries no local information
    """
    if not isinstance(readout, LocalReadout):
        raise EstimationError("inference variances require local readouts of each ensemble")
    m = readout.m
    if m < MIN_ESTIMATION_SAMPLES:
        raise EstimationError(f"at least {MIN_ESTIMATION_SAMPLES} samples required, got {m}")

    mean_x = mean_spin_steady(p)
    if mean_x == 0.0:
        raise EstimationError("mean spin is zero: witnesses are undefined")

    fits = {}
    for side in (Side.A_GIVEN_B, Side.B_GIVEN_A):
        inferred, measured = ("A", "B") if side is Side.A_GIVEN_B else ("B", "A")
        for axis in (Axis.Z, Axis.Y):
            fixed = gains.gain(axis) if gains is not None else None
            fits[side, axis] = _fit_axis(
                readout.estimate(axis, inferred), readout.estimate(axis, measured), fixed
            )

    fit_z, fit_y = fits[Side.A_GIVEN_B, Axis.Z], fits[Side.A_GIVEN_B, Axis.Y]
    e_ab = epr_parameter(fit_z.variance, fit_y.variance, mean_x)
    back_z, back_y = fits[Side.B_GIVEN_A, Axis.Z], fits[Side.B_GIVEN_A, Axis.Y]
    e_ba = epr_parameter(back_z.variance, back_y.variance, mean_x)

    sum_z, sum_z_se = _sum_variance(readout, Axis.Z)
    sum_y, sum_y_se = _sum_variance(readout, Axis.Y)
    delta_ent = (sum_z + sum_y) / (2.0 * mean_x)
    delta_ent_se = math.hypot(sum_z_se, sum_y_se) / (2.0 * mean_x)

    estimated_gains = GainPair(g_y=fit_y.gain, g_z=fit_z.gain)
    g_bound = mean_x * (1.0 + abs(estimated_gains.g_y * estimated_gains.g_z))
    delta_g_ent = (fit_z.variance + fit_y.variance) / g_bound
    delta_g_ent_se = math.hypot(fit_z.variance_se, fit_y.variance_se) / g_bound

    report = WitnessReport(
        var_inf_z=fit_z.variance,
        var_inf_y=fit_y.variance,
        delta_ent=delta_ent,
        delta_g_ent=delta_g_ent,
        e_epr_ab=e_ab,
        e_epr_ba=e_ba,
        gains=estimated_gains,
        flags=WitnessFlags(
            entangled=min(delta_ent, delta_g_ent) < ENTANGLEMENT_THRESHOLD,
            epr_ab=e_ab < EPR_THRESHOLD,
            epr_ba=e_ba < EPR_THRESHOLD,
            epr_via_sum=delta_ent < EPR_VIA_SUM_THRESHOLD,
        ),
    )
    errors = StandardErrors(
        g_y=fit_y.gain_se,
        g_z=fit_z.gain_se,
        var_inf_z=fit_z.variance_se,
        var_inf_y=fit_y.variance_se,
        delta_ent=delta_ent_se,
        delta_g_ent=delta_g_ent_se,
        e_epr_ab=_product_se(e_ab, fit_z, fit_y),
        e_epr_ba=_product_se(e_ba, back_z, back_y),
    )
    return EstimatedWitnesses(report=report, errors=errors, m=m)
