"""Measurement: Gaussian spin sampling, verifying-pulse readout and witness estimation."""

from src.core.measurement.estimation import EstimatedWitnesses, StandardErrors, estimate_witnesses
from src.core.measurement.readout import (
    CollectiveReadout,
    LocalReadout,
    PulseModel,
    collective_readout,
    local_readout,
    readout_penalty,
    verifying_pulse,
)
from src.core.measurement.sampling import (
    SPIN_COLUMNS,
    SpinSampleSet,
    covariance_from_moments,
    sample_spins,
)

__all__ = [
    "CollectiveReadout",
    "EstimatedWitnesses",
    "LocalReadout",
    "PulseModel",
    "SPIN_COLUMNS",
    "SpinSampleSet",
    "StandardErrors",
    "collective_readout",
    "covariance_from_moments",
    "estimate_witnesses",
    "local_readout",
    "readout_penalty",
    "sample_spins",
    "verifying_pulse",
]
