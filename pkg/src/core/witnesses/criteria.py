"""
Entanglement and EPR criteria evaluated on Gaussian second moments.

Gains are signed: the inference variance on one axis is
Delta^2(J_A - g J_B) = v_a + g^2 v_b - 2 g c, so the +/- branch label is
carried by the sign of g.
"""

from __future__ import annotations

import math

from src.domain.constants import EPR_THRESHOLD
from src.domain.entities import Axis, Branch, GainPair, MomentState, Side
from src.domain.exceptions import UndefinedBoundError


def inference_variance(s: MomentState, g: float, axis: Axis, side: Side = Side.A_GIVEN_B) -> float:
    """
    Variance of the error when inferring one ensemble's spin from the other's.

    Args:
        s: Moment state
        g: Signed gain
        axis: Spin component
        side: A|B infers A from B, B|A infers B from A

    Returns:
        v_inferred + g^2 v_measured - 2 g c
    """
    if side is Side.A_GIVEN_B:
        inferred, measured = s.variance(axis, "A"), s.variance(axis, "B")
    else:
        inferred, measured = s.variance(axis, "B"), s.variance(axis, "A")
    return inferred + g * g * measured - 2.0 * g * s.correlation(axis)


def sum_variance(s: MomentState, axis: Axis, branch: Branch) -> float:
    """Delta^2(J_A +/- J_B) on one axis."""
    return (
        s.variance(axis, "A") + s.variance(axis, "B") + 2.0 * branch.sign * s.correlation(axis)
    )


def reduced_branch(s: MomentState, axis: Axis) -> Branch:
    """Branch with reduced fluctuations: the difference for positive correlation."""
    return Branch.MINUS if s.correlation(axis) >= 0.0 else Branch.PLUS


def unit_gains(s: MomentState) -> GainPair:
    """Unit-magnitude gains signed to exploit the state's correlations."""
    return GainPair(
        g_y=-reduced_branch(s, Axis.Y).sign,
        g_z=-reduced_branch(s, Axis.Z).sign,
    )


def epr_parameter(var_inf_z: float, var_inf_y: float, mean_x: float) -> float:
    """
    Normalized EPR parameter Delta_inf(Z) Delta_inf(Y) / (|<J^X>|/2).

    Values below 1 signal the EPR paradox; this is the square root of the
    inferred-Heisenberg product ratio var_z var_y / (<J^X>^2 / 4).

    Args:
        var_inf_z: Inference variance on Z
        var_inf_y: Inference variance on Y
        mean_x: Mean spin of the inferred ensemble

    Raises:
        UndefinedBoundError: If the mean spin vanishes
    """
    if mean_x == 0.0:
        raise UndefinedBoundError("mean spin is zero: EPR bound undefined")
    if var_inf_z < 0.0 or var_inf_y < 0.0:
        raise ValueError(f"inference variances must be >= 0, got {var_inf_z}, {var_inf_y}")
    return math.sqrt(var_inf_z * var_inf_y) / (0.5 * abs(mean_x))


def reid_product_satisfied(var_inf_z: float, var_inf_y: float, mean_x: float) -> bool:
    """Reid product criterion var_z var_y < <J^X>^2 / 4."""
    return var_inf_z * var_inf_y < 0.25 * mean_x * mean_x


def duan_entanglement(s: MomentState) -> float:
    """
    Sum criterion [Delta^2(J_A^Z +/- J_B^Z) + Delta^2(J_A^Y +/- J_B^Y)] / (|<J_A^X>| + |<J_B^X>|).

    The reduced-fluctuation combination is taken on each axis.

    Raises:
        UndefinedBoundError: If both mean spins vanish
    """
    bound = abs(s.mean_x_a) + abs(s.mean_x_b)
    if bound == 0.0:
        raise UndefinedBoundError("mean spins are zero: sum criterion undefined")
    numerator = sum(sum_variance(s, axis, reduced_branch(s, axis)) for axis in (Axis.Z, Axis.Y))
    return numerator / bound


def gain_entanglement(s: MomentState, g: GainPair) -> float:
    """
    Gain-weighted sum criterion
    [Delta_inf^2 Z + Delta_inf^2 Y] / (|<J_A^X>| + |g_y g_z| |<J_B^X>|).

    Equals duan_entanglement at g_z = -g_y = 1 when c_zz >= 0 >= c_yy.

    Raises:
        UndefinedBoundError: If the bound vanishes
    """
    bound = abs(s.mean_x_a) + abs(g.g_y * g.g_z) * abs(s.mean_x_b)
    if bound == 0.0:
        raise UndefinedBoundError("gain-weighted bound is zero")
    numerator = inference_variance(s, g.g_z, Axis.Z) + inference_variance(s, g.g_y, Axis.Y)
    return numerator / bound


def epr_at_gains(s: MomentState, g: GainPair, side: Side = Side.A_GIVEN_B) -> float:
    """EPR parameter of one direction at given gains."""
    mean_x = s.mean_x_a if side is Side.A_GIVEN_B else s.mean_x_b
    return epr_parameter(
        max(0.0, inference_variance(s, g.g_z, Axis.Z, side)),
        max(0.0, inference_variance(s, g.g_y, Axis.Y, side)),
        mean_x,
    )


def duan_implies_epr(s: MomentState) -> float:
    """
    EPR parameter A|B at unit gains.

    For symmetric states with equal mean spins, Delta_ent < 0.5 forces this
    value below 1.
    """
    return epr_at_gains(s, unit_gains(s))


def epr_flag(value: float) -> bool:
    return value < EPR_THRESHOLD
