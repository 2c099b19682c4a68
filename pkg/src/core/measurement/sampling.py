"""
Gaussian representation of the spin moments and seeded Monte-Carlo sampling.

Samples are drawn in fixed-size batches, each from its own child seed of
numpy's SeedSequence, so the result depends only on (cov, m, seed,
batch_size) and never on how batches are scheduled.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from src.domain.constants import DEFAULT_SAMPLE_BATCH, PSD_RELATIVE_TOLERANCE
from src.domain.entities import Axis, MomentState
from src.domain.exceptions import NumericalFailureError, ParameterDomainError
from src.infrastructure.logger import get_logger

logger = get_logger(__name__)

SPIN_COLUMNS: Tuple[str, ...] = ("j_a_y", "j_a_z", "j_b_y", "j_b_z")


def spin_column(axis: Axis, ensemble: str) -> int:
    """Column index of one spin component in SPIN_COLUMNS."""
    return SPIN_COLUMNS.index(f"j_{ensemble.lower()}_{axis.value.lower()}")


@dataclass(frozen=True)
class SpinSampleSet:
    """m joint draws of (j_a_y, j_a_z, j_b_y, j_b_z)."""

    samples: np.ndarray
    seed: int

    def __post_init__(self) -> None:
        if self.samples.ndim != 2 or self.samples.shape[1] != len(SPIN_COLUMNS):
            raise ValueError(f"samples must have shape (m, 4), got {self.samples.shape}")

    @property
    def m(self) -> int:
        return int(self.samples.shape[0])

    def spin(self, axis: Axis, ensemble: str) -> np.ndarray:
        return self.samples[:, spin_column(axis, ensemble)]


def covariance_from_moments(s: MomentState) -> np.ndarray:
    """
    4x4 covariance of (J_A^Y, J_A^Z, J_B^Y, J_B^Z).

    Y-Z cross-covariances are zero.

    Raises:
        NumericalFailureError: If the matrix is not positive semidefinite
    """
    a_y, a_z = spin_column(Axis.Y, "A"), spin_column(Axis.Z, "A")
    b_y, b_z = spin_column(Axis.Y, "B"), spin_column(Axis.Z, "B")
    cov = np.zeros((4, 4))
    cov[a_y, a_y] = s.v_ay
    cov[a_z, a_z] = s.v_az
    cov[b_y, b_y] = s.v_by
    cov[b_z, b_z] = s.v_bz
    cov[a_y, b_y] = cov[b_y, a_y] = s.c_yy
    cov[a_z, b_z] = cov[b_z, a_z] = s.c_zz

    scale = max(float(np.max(np.diag(cov))), 1.0)
    smallest = float(np.min(np.linalg.eigvalsh(cov)))
    if smallest < -PSD_RELATIVE_TOLERANCE * scale:
        raise NumericalFailureError(f"covariance is not PSD (min eigenvalue {smallest:.3e})")
    return cov


def _batch_sizes(m: int, batch_size: int) -> List[int]:
    full, rest = divmod(m, batch_size)
    return [batch_size] * full + ([rest] if rest else [])


def sample_spins(
    cov: np.ndarray,
    m: int,
    seed: int,
    *,
    batch_size: int = DEFAULT_SAMPLE_BATCH,
    workers: int = 1,
) -> SpinSampleSet:
    """
    Draw m zero-mean Gaussian spin samples with covariance cov.

    Args:
        cov: 4x4 PSD covariance in SPIN_COLUMNS order
        m: Number of samples (>= 1)
        seed: Root seed; identical seeds replay identical samples
        batch_size: Samples per independently seeded batch
        workers: Threads used to draw batches

    Returns:
        SpinSampleSet

    Raises:
        NumericalFailureError: If cov is not positive semidefinite
    """
    if m < 1:
        raise ParameterDomainError(f"sample count must be >= 1, got {m}")
    if batch_size < 1:
        raise ParameterDomainError(f"batch_size must be >= 1, got {batch_size}")
    cov = np.asarray(cov, dtype=float)
    if cov.shape != (4, 4):
        raise ParameterDomainError(f"covariance must be 4x4, got {cov.shape}")

    scale = max(float(np.max(np.abs(np.diag(cov)))), 1.0)
    mean = np.zeros(len(SPIN_COLUMNS))
    sizes = _batch_sizes(m, batch_size)
    children = np.random.SeedSequence(seed).spawn(len(sizes))

    def draw(job: Tuple[int, np.random.SeedSequence]) -> np.ndarray:
        size, child = job
        rng = np.random.default_rng(child)
        try:
            return rng.multivariate_normal(
                mean,
                cov,
                size,
                check_valid="raise",
                tol=PSD_RELATIVE_TOLERANCE * scale,
                method="eigh",
            )
        except (ValueError, np.linalg.LinAlgError) as e:
            raise NumericalFailureError(f"cannot sample from covariance: {e}") from e

    logger.debug(f"Sampling {m} spin vectors in {len(sizes)} batches (seed={seed})")
    if workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            batches = list(executor.map(draw, zip(sizes, children)))
    else:
        batches = [draw(job) for job in zip(sizes, children)]
    return SpinSampleSet(samples=np.concatenate(batches, axis=0), seed=seed)
