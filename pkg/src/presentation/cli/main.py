"""
Command-line entry point.

Subcommands:
    sweep       steady-state witnesses over a Z grid, written as CSV
    steady      steady state and witness report at one Z, as JSON
    dynamics    RK4 moment trajectory from the coherent state, written as CSV
    montecarlo  sampled witness estimates with standard errors, as JSON
    causality   minimum ensemble separation for a measurement duration

Exit codes: 0 success, 1 config error, 2 numerical or I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List, Optional

from config.settings import get_settings
from src.application.services.simulation_service import (
    SimulationService,
    emit_csv,
    emit_trajectory_csv,
)
from src.core.witnesses import optimal_gain
from src.domain.exceptions import DomainException
from src.domain.utils import causal_separation, entanglement_outlives_measurement
from src.infrastructure.exceptions import InfrastructureException
from src.infrastructure.logger import get_logger
from src.infrastructure.logging_config import setup_logging
from src.presentation.cli.config_parser import load_config, parse_config
from src.presentation.cli.exceptions import EXIT_OK, CLIException, RunFailure
from src.presentation.cli.schemas import SweepConfig

logger = get_logger(__name__)

MS_PER_S = 1e3


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per subcommand."""
    parser = argparse.ArgumentParser(
        prog="spin-epr",
        description="Steady-state spin entanglement and EPR witnesses of two atomic ensembles",
    )
    parser.add_argument(
        "--workers",
        type=_positive_int,
        default=None,
        help="Worker threads (default: SPINEPR_WORKERS or 1)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("sweep", "Sweep Z and write the witness table as CSV"),
        ("steady", "Print the steady-state report at z as JSON"),
        ("dynamics", "Integrate the moments to t_end and write the trajectory as CSV"),
        ("montecarlo", "Estimate witnesses from sampled local readouts"),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument(
            "--config",
            type=Path,
            default=None,
            help="Run config file (key = value); defaults apply when omitted",
        )
        if name in ("sweep", "dynamics"):
            sub.add_argument(
                "--output",
                type=Path,
                default=None,
                help="CSV path (default: output_path from the config)",
            )

    causality = subparsers.add_parser(
        "causality", help="Minimum separation D = c * delta_t for space-like measurements"
    )
    causality.add_argument(
        "--delta-t-ms",
        type=float,
        required=True,
        help="Measurement duration in milliseconds",
    )
    causality.add_argument(
        "--lifetime-ms",
        type=float,
        default=None,
        help="Entanglement lifetime in milliseconds, checked against delta_t",
    )
    return parser


def _load(path: Optional[Path]) -> SweepConfig:
    if path is None:
        return parse_config("")
    return load_config(path)


def _print_json(payload: Dict[str, Any]) -> None:
    print(json.dumps(payload, indent=2))


def _run_sweep(args: argparse.Namespace, service: SimulationService) -> None:
    cfg = _load(args.config)
    result = service.run_sweep(cfg)
    path = emit_csv(result.rows, args.output or Path(cfg.output_path))
    failed = sum(1 for row in result.rows if not row.ok)
    print(f"wrote {len(result.rows)} rows to {path} ({failed} failed)")
    for minimum in result.minima:
        print(
            f"gamma_d_add={minimum.gamma_d_add:g} min {minimum.quantity}="
            f"{minimum.value:.6g} at Z={minimum.z:.6g}"
        )


def _run_steady(args: argparse.Namespace, service: SimulationService) -> None:
    cfg = _load(args.config)
    result = service.run_steady(cfg)
    _print_json(
        {
            "params": asdict(result.params),
            "state": asdict(result.state),
            "g_opt": asdict(optimal_gain(result.params)),
            "report": asdict(result.report),
        }
    )


def _run_dynamics(args: argparse.Namespace, service: SimulationService) -> None:
    cfg = _load(args.config)
    trajectory = service.run_dynamics(cfg)
    default = Path(cfg.output_path).with_name("trajectory.csv")
    path = emit_trajectory_csv(trajectory, args.output or default)
    print(f"wrote {len(trajectory)} steps to {path}")


def _run_montecarlo(args: argparse.Namespace, service: SimulationService) -> None:
    cfg = _load(args.config)
    estimate = service.run_montecarlo(cfg)
    _print_json(
        {
            "m": estimate.m,
            "report": asdict(estimate.report),
            "standard_errors": asdict(estimate.errors),
        }
    )


def _run_causality(args: argparse.Namespace) -> None:
    delta_t = args.delta_t_ms / MS_PER_S
    payload: Dict[str, Any] = {
        "delta_t_s": delta_t,
        "separation_m": causal_separation(delta_t),
    }
    if args.lifetime_ms is not None:
        payload["lifetime_s"] = args.lifetime_ms / MS_PER_S
        payload["outlives_measurement"] = entanglement_outlives_measurement(
            payload["lifetime_s"], delta_t
        )
    _print_json(payload)


COMMANDS = {
    "sweep": _run_sweep,
    "steady": _run_steady,
    "dynamics": _run_dynamics,
    "montecarlo": _run_montecarlo,
}


def _dispatch(args: argparse.Namespace, workers: int) -> None:
    """Run the selected subcommand, mapping numerical and I/O failures to RunFailure."""
    try:
        if args.command == "causality":
            _run_causality(args)
        else:
            COMMANDS[args.command](args, SimulationService(workers=workers))
    except (DomainException, InfrastructureException) as e:
        raise RunFailure(str(e), detail={"error": type(e).__name__}) from e


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    settings = get_settings()
    setup_logging(
        log_level=settings.log_level,
        log_file=settings.log_file_path,
        config_file=settings.log_config_path,
    )

    try:
        _dispatch(args, args.workers if args.workers is not None else settings.workers)
    except CLIException as e:
        logger.error(f"{args.command} failed: {e.message}", exc_info=e.__cause__ is not None)
        print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
