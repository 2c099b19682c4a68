"""
Simulation Service: Application service behind the CLI subcommands.

This service orchestrates steady-state sweeps, single-point reports, moment
integration and Monte-Carlo readout runs.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.core.dynamics import coherent_initial, integrate, steady_state
from src.core.dynamics.integrator import Trajectory
from src.core.measurement import (
    EstimatedWitnesses,
    covariance_from_moments,
    estimate_witnesses,
    local_readout,
    sample_spins,
)
from src.core.witnesses import classify, optimal_gain
from src.domain.entities import MOMENT_FIELDS, MomentState, WitnessReport
from src.domain.exceptions import DomainException
from src.domain.model import ModelParams
from src.infrastructure.csv_writer import Cell, write_csv
from src.infrastructure.logger import get_logger
from src.presentation.cli.schemas import MonteCarloConfig, SweepConfig

logger = get_logger(__name__)

SWEEP_HEADER: Tuple[str, ...] = (
    "Z",
    "mu",
    "nu",
    "p2",
    "gamma_d_add",
    "g_opt",
    "var_inf_z",
    "var_inf_y",
    "xi_inf",
    "xi_g_inf",
    "E_epr_inf",
    "entangled",
    "epr_ab",
    "epr_via_sum",
    "status",
)
MONTE_CARLO_HEADER: Tuple[str, ...] = (
    "g_mc",
    "g_mc_se",
    "E_epr_mc",
    "E_epr_mc_se",
    "xi_mc",
    "xi_mc_se",
)
TRAJECTORY_HEADER: Tuple[str, ...] = ("t",) + MOMENT_FIELDS

STATUS_OK = "ok"
DEFAULT_MC_SAMPLES = 100_000


@dataclass(frozen=True)
class MonteCarloColumns:
    """Monte-Carlo estimates appended to a sweep row."""

    g: float
    g_se: float
    e_epr: float
    e_epr_se: float
    xi: float
    xi_se: float

    @classmethod
    def from_estimate(cls, estimate: EstimatedWitnesses) -> MonteCarloColumns:
        report, errors = estimate.report, estimate.errors
        return cls(
            g=report.gains.g_z,
            g_se=errors.g_z,
            e_epr=report.e_epr_ab,
            e_epr_se=errors.e_epr_ab,
            xi=report.delta_ent,
            xi_se=errors.delta_ent,
        )

    @classmethod
    def missing(cls) -> MonteCarloColumns:
        return cls(*([math.nan] * 6))

    def record(self) -> List[Cell]:
        return [self.g, self.g_se, self.e_epr, self.e_epr_se, self.xi, self.xi_se]


@dataclass(frozen=True)
class SweepRow:
    """One (Z, gamma_d_add) point of a sweep."""

    Z: float
    mu: float
    nu: float
    p2: float
    gamma_d_add: float
    g_opt: float
    var_inf_z: float
    var_inf_y: float
    xi_inf: float
    xi_g_inf: float
    E_epr_inf: float
    entangled: bool
    epr_ab: bool
    epr_via_sum: bool
    status: str = STATUS_OK
    monte_carlo: Optional[MonteCarloColumns] = None

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK

    def record(self) -> List[Cell]:
        return [getattr(self, name) for name in SWEEP_HEADER]


@dataclass(frozen=True)
class CurveMinimum:
    """Minimum of one witness along one dephasing curve."""

    gamma_d_add: float
    quantity: str
    value: float
    z: float


@dataclass(frozen=True)
class SweepResult:
    """Rows in grid order plus per-curve minima."""

    rows: List[SweepRow]
    minima: List[CurveMinimum] = field(default_factory=list)


@dataclass(frozen=True)
class SteadyResult:
    """Steady state and its witnesses for one parameter point."""

    params: ModelParams
    state: MomentState
    report: WitnessReport


def _point_seeds(root: int, index: int) -> Tuple[int, int]:
    """Sampling and readout seeds of one sweep point, independent of scheduling."""
    state = np.random.SeedSequence(root, spawn_key=(index,)).generate_state(2)
    return int(state[0]), int(state[1])


def monte_carlo_estimate(
    p: ModelParams,
    state: MomentState,
    mc: MonteCarloConfig,
    sample_seed: int,
    readout_seed: int,
    workers: int = 1,
) -> EstimatedWitnesses:
    """Sample a state, read it out locally and estimate its witnesses."""
    samples = sample_spins(covariance_from_moments(state), mc.samples, sample_seed, workers=workers)
    readout = local_readout(samples, mc.pulse(), readout_seed)
    return estimate_witnesses(readout, p)


class SimulationService:
    """Service running sweeps and single-point simulations."""

    def __init__(self, workers: int = 1):
        """
        Initialize simulation service.

        Args:
            workers: Threads for independent sweep points and sample batches
        """
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        self.workers = workers

    def evaluate_point(
        self, cfg: SweepConfig, Z: float, gamma_d_add: float, index: int = 0
    ) -> SweepRow:
        """
        Steady state, optimal gains and witnesses of one sweep point.

        Numerical failures are recorded in the status column instead of raised.
        """
        try:
            p = cfg.params(Z, gamma_d_add)
            state = steady_state(p)
            report = classify(state, p)
            gains = optimal_gain(p)
            monte_carlo = None
            if cfg.mc is not None:
                sample_seed, readout_seed = _point_seeds(cfg.mc.seed, index)
                estimate = monte_carlo_estimate(p, state, cfg.mc, sample_seed, readout_seed)
                monte_carlo = MonteCarloColumns.from_estimate(estimate)
        except DomainException as e:
            logger.warning(f"Point Z={Z:.6g}, gamma_d_add={gamma_d_add:g} failed: {e}")
            return self._failed_row(cfg, Z, gamma_d_add, e)

        return SweepRow(
            Z=Z,
            mu=p.squeeze.mu,
            nu=p.squeeze.nu,
            p2=state.p2,
            gamma_d_add=gamma_d_add,
            g_opt=gains.magnitude,
            var_inf_z=report.var_inf_z,
            var_inf_y=report.var_inf_y,
            xi_inf=report.delta_ent,
            xi_g_inf=report.delta_g_ent,
            E_epr_inf=report.e_epr_ab,
            entangled=report.flags.entangled,
            epr_ab=report.flags.epr_ab,
            epr_via_sum=report.flags.epr_via_sum,
            monte_carlo=monte_carlo,
        )

    @staticmethod
    def _failed_row(
        cfg: SweepConfig, Z: float, gamma_d_add: float, error: Exception
    ) -> SweepRow:
        nan = math.nan
        return SweepRow(
            Z=Z,
            mu=nan,
            nu=nan,
            p2=nan,
            gamma_d_add=gamma_d_add,
            g_opt=nan,
            var_inf_z=nan,
            var_inf_y=nan,
            xi_inf=nan,
            xi_g_inf=nan,
            E_epr_inf=nan,
            entangled=False,
            epr_ab=False,
            epr_via_sum=False,
            status=f"failed:{type(error).__name__}",
            monte_carlo=MonteCarloColumns.missing() if cfg.mc is not None else None,
        )

    def run_sweep(self, cfg: SweepConfig) -> SweepResult:
        """
        Evaluate every (gamma_d_add, Z) point of the config.

        Args:
            cfg: Validated run configuration

        Returns:
            SweepResult with rows grouped by dephasing curve, Z ascending
        """
        grid = cfg.z_grid()
        points = [
            (float(Z), float(rate)) for rate in cfg.gamma_d_add_list for Z in grid
        ]
        logger.info(
            f"Sweeping {len(grid)} Z points x {len(cfg.gamma_d_add_list)} dephasing curves "
            f"(d={cfg.d:g}, N={cfg.N:g}, workers={self.workers})"
        )
        start_time = time.time()

        def run(job: Tuple[int, Tuple[float, float]]) -> SweepRow:
            index, (Z, rate) = job
            return self.evaluate_point(cfg, Z, rate, index)

        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                rows = list(executor.map(run, enumerate(points)))
        else:
            rows = [run(job) for job in enumerate(points)]

        minima = curve_minima(rows, cfg.gamma_d_add_list)
        for minimum in minima:
            logger.info(
                f"gamma_d_add={minimum.gamma_d_add:g}: min {minimum.quantity} = "
                f"{minimum.value:.6g} at Z = {minimum.z:.6g}"
            )
        logger.info(f"Sweep finished in {time.time() - start_time:.2f}s")
        return SweepResult(rows=rows, minima=minima)

    def run_steady(self, cfg: SweepConfig) -> SteadyResult:
        """Steady state at cfg.z with the first dephasing rate."""
        p = cfg.params(cfg.z, cfg.gamma_d_add_list[0])
        state = steady_state(p)
        return SteadyResult(params=p, state=state, report=classify(state, p))

    def run_dynamics(self, cfg: SweepConfig) -> Trajectory:
        """Integrate from the coherent state at cfg.z to cfg.t_end."""
        p = cfg.params(cfg.z, cfg.gamma_d_add_list[0])
        trajectory = integrate(coherent_initial(cfg.N), p, cfg.t_end, cfg.step)
        logger.info(f"Integrated {len(trajectory) - 1} steps to t = {cfg.t_end:g}")
        return trajectory

    def run_montecarlo(self, cfg: SweepConfig) -> EstimatedWitnesses:
        """Monte-Carlo witness estimate at cfg.z with the first dephasing rate."""
        mc = cfg.mc if cfg.mc is not None else MonteCarloConfig(samples=DEFAULT_MC_SAMPLES)
        p = cfg.params(cfg.z, cfg.gamma_d_add_list[0])
        sample_seed, readout_seed = _point_seeds(mc.seed, 0)
        logger.info(f"Monte Carlo: {mc.samples} samples at Z = {cfg.z:g} (seed={mc.seed})")
        return monte_carlo_estimate(
            p, steady_state(p), mc, sample_seed, readout_seed, workers=self.workers
        )


def curve_minima(rows: Sequence[SweepRow], rates: Sequence[float]) -> List[CurveMinimum]:
    """Minimum E_epr_inf and xi_inf (value and argmin Z) of each dephasing curve."""
    minima: List[CurveMinimum] = []
    for rate in rates:
        curve = [row for row in rows if row.gamma_d_add == rate and row.ok]
        if not curve:
            continue
        for quantity in ("E_epr_inf", "xi_inf"):
            best = min(curve, key=lambda row: getattr(row, quantity))
            minima.append(CurveMinimum(rate, quantity, getattr(best, quantity), best.Z))
    return minima


def emit_csv(rows: Sequence[SweepRow], path: Path) -> Path:
    """
    Write sweep rows in input order.

    Monte-Carlo columns are appended when any row carries them.

    Raises:
        FileOperationError: On I/O failure
    """
    with_mc = any(row.monte_carlo is not None for row in rows)
    header = SWEEP_HEADER + (MONTE_CARLO_HEADER if with_mc else ())

    def records():
        for row in rows:
            record = row.record()
            if with_mc:
                columns = row.monte_carlo or MonteCarloColumns.missing()
                record += columns.record()
            yield record

    return write_csv(path, header, records())


def emit_trajectory_csv(trajectory: Trajectory, path: Path) -> Path:
    """Write t and the six moments of every recorded step."""
    records = (
        [float(t)] + [float(v) for v in moments]
        for t, moments in zip(trajectory.times, trajectory.moments)
    )
    return write_csv(path, TRAJECTORY_HEADER, records)
