"""
Witness classification of a moment state.
"""

from __future__ import annotations

import numpy as np

from src.core.dynamics.moments import moment_derivatives, relaxation_rate
from src.core.witnesses.criteria import (
    duan_entanglement,
    epr_at_gains,
    epr_flag,
    gain_entanglement,
    inference_variance,
    unit_gains,
)
from src.core.witnesses.gains import (
    numeric_entanglement_gains,
    optimal_gain,
    state_optimal_gains,
)
from src.domain.constants import ENTANGLEMENT_THRESHOLD, EPR_VIA_SUM_THRESHOLD
from src.domain.entities import Axis, GainPair, MomentState, Side, WitnessFlags, WitnessReport
from src.domain.model import ModelParams

_FIXED_POINT_TOLERANCE = 1e-9


def is_steady(s: MomentState, p: ModelParams) -> bool:
    """True if s is a fixed point of the moment ODEs for p."""
    rates = moment_derivatives(s, p).moments()
    scale = p.N * relaxation_rate(p, s.p2)
    return bool(np.all(np.abs(rates) <= _FIXED_POINT_TOLERANCE * max(scale, 1.0)))


def assemble_report(
    s: MomentState,
    gains_ab: GainPair,
    gains_ba: GainPair,
    entanglement_gains: GainPair,
) -> WitnessReport:
    """Evaluate every witness of s at the supplied gains."""
    var_inf_z = max(0.0, inference_variance(s, gains_ab.g_z, Axis.Z))
    var_inf_y = max(0.0, inference_variance(s, gains_ab.g_y, Axis.Y))
    delta_ent = duan_entanglement(s)
    delta_g_ent = gain_entanglement(s, gains_ab)
    e_epr_ab = epr_at_gains(s, gains_ab, Side.A_GIVEN_B)
    e_epr_ba = epr_at_gains(s, gains_ba, Side.B_GIVEN_A)

    best_entanglement = min(delta_ent, delta_g_ent, gain_entanglement(s, entanglement_gains))
    flags = WitnessFlags(
        entangled=best_entanglement < ENTANGLEMENT_THRESHOLD,
        epr_ab=epr_flag(e_epr_ab),
        epr_ba=epr_flag(e_epr_ba),
        epr_via_sum=delta_ent < EPR_VIA_SUM_THRESHOLD,
    )
    return WitnessReport(
        var_inf_z=var_inf_z,
        var_inf_y=var_inf_y,
        delta_ent=delta_ent,
        delta_g_ent=delta_g_ent,
        e_epr_ab=e_epr_ab,
        e_epr_ba=e_epr_ba,
        gains=gains_ab,
        flags=flags,
    )


def classify(s: MomentState, p: ModelParams) -> WitnessReport:
    """
    Compute all witnesses and flags for a state.

    At the model's steady state the analytic gains of optimal_gain(p) are used;
    away from it the gains minimizing each inference variance are taken from
    the state. The entangled flag uses unit gains for symmetric states and a
    numeric gain search otherwise.

    Args:
        s: Moment state
        p: Model parameters the state belongs to

    Returns:
        WitnessReport
    """
    if s.is_symmetric and is_steady(s, p):
        gains_ab = optimal_gain(p)
        gains_ba = gains_ab
    else:
        gains_ab = state_optimal_gains(s, Side.A_GIVEN_B)
        gains_ba = state_optimal_gains(s, Side.B_GIVEN_A)

    entanglement_gains = unit_gains(s) if s.is_symmetric else numeric_entanglement_gains(s)
    return assemble_report(s, gains_ab, gains_ba, entanglement_gains)
