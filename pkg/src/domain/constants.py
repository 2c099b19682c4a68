"""
Domain Constants: Constants used across the domain layer.

These constants define physical values and simulation defaults.
"""

from typing import Tuple

# Physical constants
SPEED_OF_LIGHT_M_PER_S: float = 299_792_458.0

# Model defaults (rates in units of the single-atom decay rate)
DEFAULT_GAMMA: float = 1.0
DEFAULT_OPTICAL_DEPTH: float = 30.0
DEFAULT_ATOM_NUMBER: float = 1.0e6
DEFAULT_GAMMA_D_ADD: Tuple[float, ...] = (0.0, 2.0, 5.0)

# Sweep defaults
DEFAULT_Z_MIN: float = 1.0
DEFAULT_Z_MAX: float = 4.0
DEFAULT_Z_STEPS: int = 300
DEFAULT_Z_POINT: float = 2.0

# Tolerances
SQUEEZE_RELATIVE_TOLERANCE: float = 1e-12
PSD_RELATIVE_TOLERANCE: float = 1e-12

# Integration
STABILITY_GUARD: float = 0.1  # max h * (gamma_tilde + d * gamma)

# Monte Carlo
DEFAULT_SAMPLE_BATCH: int = 100_000
MIN_ESTIMATION_SAMPLES: int = 100
DEFAULT_PHOTON_NUMBER: float = 1.0e6

# Witness thresholds
ENTANGLEMENT_THRESHOLD: float = 1.0
EPR_THRESHOLD: float = 1.0
EPR_VIA_SUM_THRESHOLD: float = 0.5
