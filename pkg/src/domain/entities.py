"""
Domain Entities: Core value objects of the two-ensemble model.

Second moments, gains and witness reports are immutable; they are produced
by the core modules and consumed by the services and the CLI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Tuple

import numpy as np

from src.domain.constants import PSD_RELATIVE_TOLERANCE
from src.domain.exceptions import ParameterDomainError

MOMENT_FIELDS: Tuple[str, ...] = ("v_az", "v_ay", "v_bz", "v_by", "c_zz", "c_yy")


class Axis(str, Enum):
    """Transverse spin component."""

    Y = "Y"
    Z = "Z"


class Branch(str, Enum):
    """Sign in J_A +/- |g| J_B."""

    PLUS = "+"
    MINUS = "-"

    @property
    def sign(self) -> float:
        return 1.0 if self is Branch.PLUS else -1.0

    @classmethod
    def for_gain(cls, g: float) -> Branch:
        """Branch realised by a signed gain in J_A - g J_B."""
        return cls.MINUS if g > 0.0 else cls.PLUS


class Side(str, Enum):
    """Direction of inference: A|B predicts A from B."""

    A_GIVEN_B = "A|B"
    B_GIVEN_A = "B|A"


@dataclass(frozen=True)
class MomentState:
    """Second moments of both ensembles plus the scalars that close the dynamics."""

    v_az: float
    v_ay: float
    v_bz: float
    v_by: float
    c_zz: float
    c_yy: float
    p2: float
    mean_x_a: float
    mean_x_b: float

    def __post_init__(self) -> None:
        """Validate variances, Cauchy-Schwarz bounds and the anti-parallel geometry."""
        values = (
            self.v_az,
            self.v_ay,
            self.v_bz,
            self.v_by,
            self.c_zz,
            self.c_yy,
            self.p2,
            self.mean_x_a,
            self.mean_x_b,
        )
        if not all(math.isfinite(v) for v in values):
            raise ParameterDomainError(f"MomentState has non-finite entries: {values}")
        if min(self.v_az, self.v_ay, self.v_bz, self.v_by) < 0.0:
            raise ParameterDomainError("MomentState variances must be >= 0")
        if not 0.0 <= self.p2 <= 1.0:
            raise ParameterDomainError(f"p2 must lie in [0, 1], got {self.p2}")
        if self.mean_x_a * self.mean_x_b > 0.0:
            raise ParameterDomainError("mean spins must be anti-parallel")
        for axis in (Axis.Y, Axis.Z):
            if not self.satisfies_cauchy_schwarz(axis):
                raise ParameterDomainError(f"{axis.value} covariance block is not PSD")

    def satisfies_cauchy_schwarz(self, axis: Axis) -> bool:
        """|c| <= sqrt(v_a v_b) on one axis, up to rounding."""
        bound = math.sqrt(self.variance(axis, "A") * self.variance(axis, "B"))
        scale = max(self.variance(axis, "A"), self.variance(axis, "B"), 1.0)
        return abs(self.correlation(axis)) <= bound + PSD_RELATIVE_TOLERANCE * scale

    def variance(self, axis: Axis, ensemble: str) -> float:
        """Second moment of one ensemble's spin component."""
        if ensemble == "A":
            return self.v_ay if axis is Axis.Y else self.v_az
        if ensemble == "B":
            return self.v_by if axis is Axis.Y else self.v_bz
        raise ValueError(f"Unknown ensemble: {ensemble}")

    def correlation(self, axis: Axis) -> float:
        """Cross moment <J_A J_B> on one axis."""
        return self.c_yy if axis is Axis.Y else self.c_zz

    @property
    def is_symmetric(self) -> bool:
        """True if the state is invariant under A <-> B."""
        return (
            math.isclose(self.v_az, self.v_bz, rel_tol=1e-12)
            and math.isclose(self.v_ay, self.v_by, rel_tol=1e-12)
            and math.isclose(abs(self.mean_x_a), abs(self.mean_x_b), rel_tol=1e-12)
        )

    def swapped(self) -> MomentState:
        """Relabel A <-> B."""
        return replace(
            self,
            v_az=self.v_bz,
            v_ay=self.v_by,
            v_bz=self.v_az,
            v_by=self.v_ay,
            mean_x_a=self.mean_x_b,
            mean_x_b=self.mean_x_a,
        )

    def moments(self) -> np.ndarray:
        """The six second moments in MOMENT_FIELDS order."""
        return np.array([getattr(self, name) for name in MOMENT_FIELDS], dtype=float)

    @classmethod
    def from_moments(
        cls, moments: np.ndarray, p2: float, mean_x_a: float, mean_x_b: float
    ) -> MomentState:
        """Create from an array in MOMENT_FIELDS order."""
        if len(moments) != len(MOMENT_FIELDS):
            raise ValueError(f"MomentState requires 6 moments, got {len(moments)}")
        values = {name: float(v) for name, v in zip(MOMENT_FIELDS, moments)}
        return cls(p2=p2, mean_x_a=mean_x_a, mean_x_b=mean_x_b, **values)


@dataclass(frozen=True)
class MomentDerivatives:
    """Rate of change of a MomentState."""

    v_az: float
    v_ay: float
    v_bz: float
    v_by: float
    c_zz: float
    c_yy: float
    p2: float = 0.0

    def moments(self) -> np.ndarray:
        return np.array([getattr(self, name) for name in MOMENT_FIELDS], dtype=float)


@dataclass(frozen=True)
class GainPair:
    """Signed inference gains; a positive gain realises J_A - |g| J_B."""

    g_y: float
    g_z: float

    @property
    def branch_y(self) -> Branch:
        return Branch.for_gain(self.g_y)

    @property
    def branch_z(self) -> Branch:
        return Branch.for_gain(self.g_z)

    def gain(self, axis: Axis) -> float:
        return self.g_y if axis is Axis.Y else self.g_z

    @property
    def magnitude(self) -> float:
        """Common magnitude |g| (the larger of the two for asymmetric pairs)."""
        return max(abs(self.g_y), abs(self.g_z))

    @classmethod
    def unit(cls) -> GainPair:
        """g_z = -g_y = 1, the gains that turn the gain witness into the sum criterion."""
        return cls(g_y=-1.0, g_z=1.0)


@dataclass(frozen=True)
class WitnessFlags:
    """Classification of a parameter point."""

    entangled: bool
    epr_ab: bool
    epr_ba: bool
    epr_via_sum: bool


@dataclass(frozen=True)
class WitnessReport:
    """All entanglement and EPR witness values for one state."""

    var_inf_z: float
    var_inf_y: float
    delta_ent: float
    delta_g_ent: float
    e_epr_ab: float
    e_epr_ba: float
    gains: GainPair
    flags: WitnessFlags
