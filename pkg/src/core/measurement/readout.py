"""
Optical readout of the atomic spins by detuned verifying pulses.

A pulse crossing one ensemble maps
    S_out^Y = S_in^Y + alpha J^Z,   S_out^Z = S_in^Z,
    J_out^Y = J^Y + beta S_in^Z,    J_out^Z = J^Z.
The Y component is read in a separate procedure after rotating the atomic
spin, so the measured component always plays the role of J^Z above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from src.core.measurement.sampling import SpinSampleSet, spin_column
from src.domain.constants import DEFAULT_PHOTON_NUMBER
from src.domain.entities import Axis
from src.domain.exceptions import NoInversionError, ParameterDomainError

_PASS_ORDER: Tuple[Axis, ...] = (Axis.Y, Axis.Z)


@dataclass(frozen=True)
class PulseModel:
    """Verifying-pulse parameters; alpha = inf models a noiseless readout."""

    alpha: float
    n_p: float = DEFAULT_PHOTON_NUMBER
    r_light: float = 0.0

    def __post_init__(self) -> None:
        """Validate coupling, photon number and squeezing."""
        if math.isnan(self.alpha) or self.alpha < 0.0:
            raise ParameterDomainError(f"alpha must be >= 0, got {self.alpha}")
        if not math.isfinite(self.n_p) or self.n_p <= 0.0:
            raise ParameterDomainError(f"n_p must be > 0, got {self.n_p}")
        if not math.isfinite(self.r_light):
            raise ParameterDomainError(f"r_light must be finite, got {self.r_light}")

    @property
    def input_variance(self) -> float:
        """Variance of the input S^Y: shot noise n_p/4 reduced by exp(-2 r_light)."""
        return math.exp(-2.0 * self.r_light) * self.n_p / 4.0

    @property
    def conjugate_variance(self) -> float:
        """Variance of the input S^Z, anti-squeezed by exp(+2 r_light)."""
        return math.exp(2.0 * self.r_light) * self.n_p / 4.0

    @property
    def noise_variance(self) -> float:
        """Readout noise added to each spin estimate."""
        self.require_invertible()
        if math.isinf(self.alpha):
            return 0.0
        return self.input_variance / (self.alpha * self.alpha)

    def require_invertible(self) -> None:
        if self.alpha == 0.0:
            raise NoInversionError("alpha = 0: the pulse carries no spin signal")


def readout_penalty(g: float, pulse: PulseModel) -> float:
    """Excess inference variance (1 + g^2) exp(-2 r_light) n_p / (4 alpha^2)."""
    return (1.0 + g * g) * pulse.noise_variance


def verifying_pulse(
    measured: np.ndarray,
    conjugate: np.ndarray,
    s_in_y: np.ndarray,
    s_in_z: np.ndarray,
    alpha: float,
    beta: float = 0.0,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Field/atom map of one pulse crossing one ensemble.

    Args:
        measured: Spin component read by the pulse (J^Z role)
        conjugate: Spin component receiving back-action (J^Y role)
        s_in_y: Input Stokes S^Y
        s_in_z: Input Stokes S^Z
        alpha: Coupling of the spin into S^Y
        beta: Back-action coupling of S^Z into the conjugate spin

    Returns:
        (S_out^Y, S_out^Z, conjugate_out); the measured spin is unchanged
    """
    return s_in_y + alpha * measured, s_in_z, conjugate + beta * s_in_z


def _other(axis: Axis) -> Axis:
    return Axis.Z if axis is Axis.Y else Axis.Y


def _pass_seeds(seed: int) -> Dict[Axis, np.random.SeedSequence]:
    return dict(zip(_PASS_ORDER, np.random.SeedSequence(seed).spawn(len(_PASS_ORDER))))


@dataclass(frozen=True)
class LocalReadout:
    """Per-sample local spin estimates from two verifying pulses per axis."""

    estimates: Dict[Axis, np.ndarray]  # axis -> (m, 2) array of (j_a_hat, j_b_hat)
    pulse: PulseModel

    @property
    def m(self) -> int:
        return int(self.estimates[Axis.Z].shape[0])

    def estimate(self, axis: Axis, ensemble: str) -> np.ndarray:
        return self.estimates[axis][:, 0 if ensemble == "A" else 1]


def local_readout(samples: SpinSampleSet, pulse: PulseModel, seed: int) -> LocalReadout:
    """
    Read each ensemble with its own pulse, one axis per experimental procedure.

    Each pass is a verifying pulse without back-action, and each spin estimate
    is j_hat = S_out^Y / alpha = j + S_in^Y / alpha.

    Args:
        samples: Spin samples
        pulse: Pulse parameters
        seed: Seed of the input light noise

    Returns:
        LocalReadout

    Raises:
        NoInversionError: If alpha = 0
    """
    pulse.require_invertible()
    seeds = _pass_seeds(seed)
    estimates: Dict[Axis, np.ndarray] = {}
    for axis in _PASS_ORDER:
        rng = np.random.default_rng(seeds[axis])
        shape = (samples.m, 2)
        s_in_y = rng.normal(0.0, math.sqrt(pulse.input_variance), size=shape)
        s_in_z = rng.normal(0.0, math.sqrt(pulse.conjugate_variance), size=shape)
        if math.isinf(pulse.alpha):
            estimates[axis] = np.column_stack([samples.spin(axis, "A"), samples.spin(axis, "B")])
            continue
        columns = []
        for column, ensemble in enumerate(("A", "B")):
            s_out_y, _, _ = verifying_pulse(
                samples.spin(axis, ensemble),
                samples.spin(_other(axis), ensemble),
                s_in_y[:, column],
                s_in_z[:, column],
                pulse.alpha,
            )
            columns.append(s_out_y / pulse.alpha)
        estimates[axis] = np.column_stack(columns)
    return LocalReadout(estimates=estimates, pulse=pulse)



@dataclass(frozen=True)
class CollectiveReadout:
    """Sum estimates from one pulse crossing both ensembles."""

    sums: Dict[Axis, np.ndarray]  # axis -> estimates of j_a + j_b
    after_z_pass: SpinSampleSet
    pulse: PulseModel

    @property
    def m(self) -> int:
        return int(self.sums[Axis.Z].shape[0])


def collective_readout(
    samples: SpinSampleSet,
    pulse: PulseModel,
    seed: int,
    beta: float = 0.0,
) -> CollectiveReadout:
    """
    One pulse through A then B (beta reversed at B); only the sum is observable.

    The back-action adds +beta S_in^Z to A and -beta S_in^Z to B, so the sum of
    the conjugate components is conserved.

    Args:
        samples: Spin samples
        pulse: Pulse parameters
        seed: Seed of the input light noise
        beta: Back-action coupling

    Returns:
        CollectiveReadout with the post-pulse spins of the Z procedure

    Raises:
        NoInversionError: If alpha = 0
    """
    pulse.require_invertible()
    seeds = _pass_seeds(seed)
    sums: Dict[Axis, np.ndarray] = {}
    after_z_pass = samples
    for axis in _PASS_ORDER:
        rng = np.random.default_rng(seeds[axis])
        s_in_y = rng.normal(0.0, math.sqrt(pulse.input_variance), size=samples.m)
        s_in_z = rng.normal(0.0, math.sqrt(pulse.conjugate_variance), size=samples.m)
        conjugate = _other(axis)

        if math.isinf(pulse.alpha):
            sums[axis] = samples.spin(axis, "A") + samples.spin(axis, "B")
            conj_a = samples.spin(conjugate, "A") + beta * s_in_z
            conj_b = samples.spin(conjugate, "B") - beta * s_in_z
        else:
            s_mid_y, s_mid_z, conj_a = verifying_pulse(
                samples.spin(axis, "A"),
                samples.spin(conjugate, "A"),
                s_in_y,
                s_in_z,
                pulse.alpha,
                beta,
            )
            s_out_y, _, conj_b = verifying_pulse(
                samples.spin(axis, "B"),
                samples.spin(conjugate, "B"),
                s_mid_y,
                s_mid_z,
                pulse.alpha,
                -beta,
            )
            sums[axis] = s_out_y / pulse.alpha

        if axis is Axis.Z:
            post = samples.samples.copy()
            post[:, spin_column(conjugate, "A")] = conj_a
            post[:, spin_column(conjugate, "B")] = conj_b
            after_z_pass = SpinSampleSet(samples=post, seed=samples.seed)

    return CollectiveReadout(sums=sums, after_z_pass=after_z_pass, pulse=pulse)
