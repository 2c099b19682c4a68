"""
Model Parameters: Squeezing, rate algebra and steady-state population.

All parameter objects are immutable value objects; every operation here is a
pure function. Rates are expressed in units of the single-atom decay rate
(gamma = 1 by default) and times in units of 1/gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

from src.domain.constants import (
    DEFAULT_ATOM_NUMBER,
    DEFAULT_GAMMA,
    DEFAULT_OPTICAL_DEPTH,
    SQUEEZE_RELATIVE_TOLERANCE,
)
from src.domain.exceptions import DegenerateModelError, ParameterDomainError


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ParameterDomainError(f"{name} must be finite, got {value}")


def _require_non_negative(name: str, value: float) -> None:
    _require_finite(name, value)
    if value < 0.0:
        raise ParameterDomainError(f"{name} must be >= 0, got {value}")


@dataclass(frozen=True)
class SqueezeParams:
    """Squeezing parametrization (mu, nu, r, Z) of the engineered dissipation."""

    mu: float
    nu: float
    r: float
    Z: float

    def __post_init__(self) -> None:
        """Validate mu^2 - nu^2 = 1 and Z = 1/(mu - nu)."""
        for name in ("mu", "nu", "r", "Z"):
            _require_finite(name, getattr(self, name))
        if self.mu < 1.0 or self.nu < 0.0:
            raise ParameterDomainError(
                f"Squeezing requires mu >= 1 and nu >= 0, got mu={self.mu}, nu={self.nu}"
            )
        tolerance = SQUEEZE_RELATIVE_TOLERANCE * max(1.0, self.mu * self.mu)
        if abs(self.mu * self.mu - self.nu * self.nu - 1.0) > tolerance:
            raise ParameterDomainError(f"mu^2 - nu^2 != 1 for mu={self.mu}, nu={self.nu}")
        if abs(self.Z * (self.mu - self.nu) - 1.0) > tolerance:
            raise ParameterDomainError(f"Z != 1/(mu - nu) for Z={self.Z}")
        if abs(math.exp(self.r) - self.Z) > tolerance * self.Z:
            raise ParameterDomainError(f"Z != exp(r) for r={self.r}, Z={self.Z}")

    @property
    def weight(self) -> float:
        """mu^2 + nu^2, the noise weight of the entangling source."""
        return self.mu * self.mu + self.nu * self.nu

    @property
    def correlation(self) -> float:
        """mu * nu, the strength of the two-mode correlation source."""
        return self.mu * self.nu

    @classmethod
    def from_r(cls, r: float) -> SqueezeParams:
        """Create from the squeeze parameter r (mu = cosh r, nu = sinh r)."""
        _require_non_negative("r", r)
        return squeeze_from_Z(math.exp(r))


def squeeze_from_Z(Z: float) -> SqueezeParams:
    """
    Build squeezing parameters from Z = 1/(mu - nu).

    Args:
        Z: Squeezing factor, finite and >= 1

    Returns:
        SqueezeParams with mu = (Z + 1/Z)/2, nu = (Z - 1/Z)/2, r = ln Z

    Raises:
        ParameterDomainError: If Z < 1 or Z is not finite
    """
    _require_finite("Z", Z)
    if Z < 1.0:
        raise ParameterDomainError(f"Z must be >= 1 (nu >= 0), got {Z}")
    inverse = 1.0 / Z
    return SqueezeParams(
        mu=0.5 * (Z + inverse),
        nu=0.5 * (Z - inverse),
        r=math.log(Z),
        Z=Z,
    )


@dataclass(frozen=True)
class RateSet:
    """All single-particle decay/dephasing rates plus the optical depth."""

    gamma: float
    gamma_cool: float
    gamma_heat: float
    gamma_d_rad: float
    gamma_d_add: float
    gamma_d: float
    gamma_tilde: float
    d: float

    def __post_init__(self) -> None:
        """Validate non-negativity and the two summation identities."""
        for name in (
            "gamma",
            "gamma_cool",
            "gamma_heat",
            "gamma_d_rad",
            "gamma_d_add",
            "gamma_d",
            "gamma_tilde",
            "d",
        ):
            _require_non_negative(name, getattr(self, name))
        if self.gamma_d != self.gamma_d_rad + self.gamma_d_add:
            raise ParameterDomainError("gamma_d must equal gamma_d_rad + gamma_d_add")
        if self.gamma_tilde != self.gamma_cool + self.gamma_heat + self.gamma_d:
            raise ParameterDomainError(
                "gamma_tilde must equal gamma_cool + gamma_heat + gamma_d"
            )

    @classmethod
    def build(
        cls,
        gamma: float,
        gamma_cool: float,
        gamma_heat: float,
        gamma_d_rad: float,
        gamma_d_add: float,
        d: float,
    ) -> RateSet:
        """Create a rate set, deriving gamma_d and gamma_tilde."""
        gamma_d = gamma_d_rad + gamma_d_add
        return cls(
            gamma=gamma,
            gamma_cool=gamma_cool,
            gamma_heat=gamma_heat,
            gamma_d_rad=gamma_d_rad,
            gamma_d_add=gamma_d_add,
            gamma_d=gamma_d,
            gamma_tilde=gamma_cool + gamma_heat + gamma_d,
            d=d,
        )


def rates_from_squeeze(
    sq: SqueezeParams,
    gamma: float = DEFAULT_GAMMA,
    gamma_d_add: float = 0.0,
    d: float = DEFAULT_OPTICAL_DEPTH,
) -> RateSet:
    """
    Evaluate the rate algebra: cooling mu^2 gamma, heating nu^2 gamma and
    radiative dephasing 2(mu^2 + nu^2) gamma.

    Args:
        sq: Squeezing parameters
        gamma: Single-atom radiative decay rate (> 0)
        gamma_d_add: Additional non-radiative dephasing rate (>= 0)
        d: Optical depth per ensemble (>= 0)

    Returns:
        RateSet

    Raises:
        ParameterDomainError: On negative or non-finite inputs
    """
    _require_finite("gamma", gamma)
    if gamma <= 0.0:
        raise ParameterDomainError(f"gamma must be > 0, got {gamma}")
    _require_non_negative("gamma_d_add", gamma_d_add)
    _require_non_negative("d", d)
    return RateSet.build(
        gamma=gamma,
        gamma_cool=sq.mu * sq.mu * gamma,
        gamma_heat=sq.nu * sq.nu * gamma,
        gamma_d_rad=2.0 * sq.weight * gamma,
        gamma_d_add=gamma_d_add,
        d=d,
    )


class PopulationMode(str, Enum):
    """How the steady-state normalized population P2 is obtained."""

    DERIVED = "derived-rate-balance"
    FIXED = "fixed"


@dataclass(frozen=True)
class PopulationModel:
    """Steady-state population model (rate balance or a user-fixed value)."""

    mode: PopulationMode = PopulationMode.DERIVED
    fixed_value: Optional[float] = None

    def __post_init__(self) -> None:
        """Validate that fixed mode carries a value in [0, 1]."""
        if self.mode is PopulationMode.FIXED:
            if self.fixed_value is None:
                raise ParameterDomainError("fixed population model requires fixed_value")
            _require_finite("fixed_value", self.fixed_value)
            if not 0.0 <= self.fixed_value <= 1.0:
                raise ParameterDomainError(
                    f"fixed_value must lie in [0, 1], got {self.fixed_value}"
                )

    def steady_value(self, rates: RateSet) -> float:
        """
        Evaluate P2 at steady state.

        Args:
            rates: Rate set supplying cooling and heating

        Returns:
            P2 in [0, 1]

        Raises:
            DegenerateModelError: If cooling + heating vanishes in derived mode
        """
        if self.mode is PopulationMode.FIXED:
            assert self.fixed_value is not None
            return self.fixed_value

        total = rates.gamma_cool + rates.gamma_heat
        if total <= 0.0:
            raise DegenerateModelError("gamma_cool + gamma_heat = 0: P2 is undefined")
        return min(1.0, max(0.0, (rates.gamma_cool - rates.gamma_heat) / total))


@dataclass(frozen=True)
class ModelParams:
    """Complete parameter set of the two-ensemble model."""

    squeeze: SqueezeParams
    rates: RateSet
    N: float = DEFAULT_ATOM_NUMBER
    pop: PopulationModel = field(default_factory=PopulationModel)

    def __post_init__(self) -> None:
        """Validate atom number."""
        _require_finite("N", self.N)
        if self.N <= 0.0:
            raise ParameterDomainError(f"N must be > 0, got {self.N}")

    @classmethod
    def from_z(
        cls,
        Z: float,
        *,
        d: float = DEFAULT_OPTICAL_DEPTH,
        gamma: float = DEFAULT_GAMMA,
        gamma_d_add: float = 0.0,
        N: float = DEFAULT_ATOM_NUMBER,
        pop: Optional[PopulationModel] = None,
    ) -> ModelParams:
        """Assemble parameters for one sweep point."""
        squeeze = squeeze_from_Z(Z)
        return cls(
            squeeze=squeeze,
            rates=rates_from_squeeze(squeeze, gamma=gamma, gamma_d_add=gamma_d_add, d=d),
            N=N,
            pop=pop if pop is not None else PopulationModel(),
        )

    def with_atom_number(self, N: float) -> ModelParams:
        """Copy with a different atom number."""
        return replace(self, N=N)


def p2_steady(params: ModelParams) -> float:
    """Steady-state normalized population P2,inf for the configured model."""
    return params.pop.steady_value(params.rates)
