"""
CLI Schemas: Pydantic models for run configuration.

These schemas define the config-file contract and provide automatic validation.
"""

from __future__ import annotations

import math
from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.core.measurement.readout import PulseModel
from src.domain.constants import (
    DEFAULT_ATOM_NUMBER,
    DEFAULT_GAMMA,
    DEFAULT_GAMMA_D_ADD,
    DEFAULT_OPTICAL_DEPTH,
    DEFAULT_PHOTON_NUMBER,
    DEFAULT_Z_MAX,
    DEFAULT_Z_MIN,
    DEFAULT_Z_POINT,
    DEFAULT_Z_STEPS,
    MIN_ESTIMATION_SAMPLES,
)
from src.domain.model import ModelParams, PopulationMode, PopulationModel


class MonteCarloConfig(BaseModel):
    """Monte-Carlo readout settings (enabled by mc_samples)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    samples: int = Field(..., ge=MIN_ESTIMATION_SAMPLES, description="Samples per point")
    seed: int = Field(0, ge=0, description="Root RNG seed")
    alpha: float = Field(math.inf, gt=0.0, description="Readout coupling (inf = noiseless)")
    n_p: float = Field(DEFAULT_PHOTON_NUMBER, gt=0.0, description="Photons per pulse")
    r_light: float = Field(0.0, description="Input Stokes squeeze parameter")

    @field_validator("n_p", "r_light")
    @classmethod
    def validate_finite(cls, v: float) -> float:
        """Reject inf/nan photon numbers and squeeze parameters."""
        if not math.isfinite(v):
            raise ValueError("must be finite")
        return v

    def pulse(self) -> PulseModel:
        """Pulse model of the verifying pulses."""
        return PulseModel(alpha=self.alpha, n_p=self.n_p, r_light=self.r_light)


class SweepConfig(BaseModel):
    """Validated run configuration shared by all subcommands."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    # Grid
    z_min: float = Field(DEFAULT_Z_MIN, ge=1.0, description="Smallest Z of the sweep")
    z_max: float = Field(DEFAULT_Z_MAX, ge=1.0, description="Largest Z of the sweep")
    z_steps: int = Field(DEFAULT_Z_STEPS, ge=1, description="Number of Z points")
    scale: Literal["linear", "log"] = Field("log", description="Z spacing")
    z: float = Field(DEFAULT_Z_POINT, ge=1.0, description="Single Z for steady/dynamics/MC")

    # Physics
    d: float = Field(DEFAULT_OPTICAL_DEPTH, ge=0.0, description="Optical depth per ensemble")
    gamma: float = Field(DEFAULT_GAMMA, gt=0.0, description="Radiative decay rate")
    gamma_d_add_list: List[float] = Field(
        default_factory=lambda: list(DEFAULT_GAMMA_D_ADD),
        min_length=1,
        description="Additional dephasing rates, one curve each",
    )
    N: float = Field(DEFAULT_ATOM_NUMBER, gt=0.0, description="Atoms per ensemble")
    population_model: PopulationMode = Field(PopulationMode.DERIVED)
    population_fixed: Optional[float] = Field(None, ge=0.0, le=1.0)

    # Dynamics
    t_end: float = Field(1.0, gt=0.0, description="Integration horizon in units of 1/gamma")
    step: Optional[float] = Field(None, gt=0.0, description="RK4 step (default: guard limit)")

    # Monte Carlo and output
    mc: Optional[MonteCarloConfig] = None
    output_path: str = Field("output/sweep.csv", min_length=1)

    @field_validator("z_min", "z_max", "z", "d", "gamma", "N", "t_end")
    @classmethod
    def validate_finite(cls, v: float) -> float:
        """Reject inf/nan physical values."""
        if not math.isfinite(v):
            raise ValueError("must be finite")
        return v

    @field_validator("gamma_d_add_list")
    @classmethod
    def validate_dephasing(cls, v: List[float]) -> List[float]:
        """Each dephasing rate must be finite and >= 0."""
        for rate in v:
            if not math.isfinite(rate) or rate < 0.0:
                raise ValueError(f"gamma_d_add values must be finite and >= 0, got {rate}")
        return v

    @model_validator(mode="after")
    def validate_ranges(self) -> SweepConfig:
        """Cross-field checks."""
        if self.z_min > self.z_max:
            raise ValueError("z_min > z_max")
        if self.population_model is PopulationMode.FIXED and self.population_fixed is None:
            raise ValueError("population_fixed is required when population_model = fixed")
        return self

    def population(self) -> PopulationModel:
        """Population model of the run."""
        if self.population_model is PopulationMode.FIXED:
            return PopulationModel(PopulationMode.FIXED, self.population_fixed)
        return PopulationModel()

    def z_grid(self) -> np.ndarray:
        """Z points in sweep order."""
        if self.z_steps == 1:
            return np.array([self.z_min])
        if self.scale == "log":
            return np.geomspace(self.z_min, self.z_max, self.z_steps)
        return np.linspace(self.z_min, self.z_max, self.z_steps)

    def params(self, Z: float, gamma_d_add: float) -> ModelParams:
        """Model parameters of one sweep point."""
        return ModelParams.from_z(
            Z,
            d=self.d,
            gamma=self.gamma,
            gamma_d_add=gamma_d_add,
            N=self.N,
            pop=self.population(),
        )
