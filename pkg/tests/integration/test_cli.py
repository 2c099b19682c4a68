"""
Black-box tests of the command-line entry point and its exit codes.
"""

import json
from pathlib import Path

import pytest
from pytest_mock import MockerFixture

from src.infrastructure.exceptions import FileOperationError
from src.presentation.cli.exceptions import EXIT_CONFIG_ERROR, EXIT_OK, EXIT_RUN_FAILURE
from src.presentation.cli.main import main


def _config(tmp_path: Path, text: str) -> str:
    path = tmp_path / "run.conf"
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_sweep_writes_csv(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """Test a successful sweep exits 0 and reports the minima."""
    config = _config(tmp_path, "z_steps = 40\ngamma_d_add = 0\n")
    output = tmp_path / "out" / "sweep.csv"

    assert main(["sweep", "--config", config, "--output", str(output)]) == EXIT_OK

    lines = output.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("Z,mu,nu,p2,")
    assert len(lines) == 41
    stdout = capsys.readouterr().out
    assert "min E_epr_inf" in stdout
    assert "min xi_inf" in stdout


def test_config_error_exits_1(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """Test an invalid config exits 1 and names the key."""
    config = _config(tmp_path, "z_min = 5\nz_max = 2\n")

    assert main(["sweep", "--config", config]) == EXIT_CONFIG_ERROR
    assert "z_min > z_max" in capsys.readouterr().err


def test_non_finite_pulse_value_exits_1(tmp_path: Path) -> None:
    """Test an infinite photon number fails the config instead of every sweep row."""
    config = _config(tmp_path, "z_steps = 3\ngamma_d_add = 0\nmc_samples = 1000\nmc_n_p = inf\n")

    assert main(["sweep", "--config", config]) == EXIT_CONFIG_ERROR


def test_missing_config_file_exits_1(tmp_path: Path) -> None:
    """Test an unreadable config file is a config error."""
    assert main(["steady", "--config", str(tmp_path / "nope.conf")]) == EXIT_CONFIG_ERROR


def test_unwritable_output_exits_2(tmp_path: Path) -> None:
    """Test an output path under a regular file exits 2."""
    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="utf-8")
    config = _config(tmp_path, "z_steps = 3\n")

    code = main(["sweep", "--config", config, "--output", str(blocker / "sweep.csv")])
    assert code == EXIT_RUN_FAILURE


def test_write_failure_exits_2(tmp_path: Path, mocker: MockerFixture) -> None:
    """Test an I/O error raised while writing exits 2."""
    mocker.patch(
        "src.application.services.simulation_service.write_csv",
        side_effect=FileOperationError("disk full"),
    )
    config = _config(tmp_path, "z_steps = 3\n")

    assert main(["sweep", "--config", config, "--output", str(tmp_path / "s.csv")]) == 2


def test_numerical_failure_exits_2(tmp_path: Path) -> None:
    """Test a steady state without mean spin exits 2."""
    config = _config(tmp_path, "population_model = fixed\npopulation_fixed = 0\n")

    assert main(["steady", "--config", config]) == EXIT_RUN_FAILURE


def test_steady_prints_report(capsys: pytest.CaptureFixture) -> None:
    """Test the default steady report at Z = 2."""
    assert main(["steady"]) == EXIT_OK

    payload = json.loads(capsys.readouterr().out)
    assert payload["g_opt"]["g_z"] == pytest.approx(0.607855, rel=1e-4)
    assert payload["report"]["e_epr_ab"] == pytest.approx(1.33982, rel=1e-4)
    assert payload["report"]["flags"]["entangled"] is True
    assert payload["state"]["v_az"] == pytest.approx(2.5e5)


def test_dynamics_writes_trajectory(tmp_path: Path) -> None:
    """Test the trajectory CSV starts at t = 0 from the coherent state."""
    config = _config(tmp_path, "t_end = 0.05\n")
    output = tmp_path / "trajectory.csv"

    assert main(["dynamics", "--config", config, "--output", str(output)]) == EXIT_OK

    lines = output.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "t,v_az,v_ay,v_bz,v_by,c_zz,c_yy"
    assert lines[1].startswith("0,250000,250000,250000,250000,0,0")


def test_unstable_step_exits_2(tmp_path: Path) -> None:
    """Test a step above the stability guard is a numerical failure."""
    config = _config(tmp_path, "step = 0.5\n")

    code = main(["dynamics", "--config", config, "--output", str(tmp_path / "t.csv")])
    assert code == EXIT_RUN_FAILURE


def test_montecarlo_prints_estimates(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """Test the Monte-Carlo report carries standard errors."""
    config = _config(tmp_path, "mc_samples = 5000\nmc_seed = 1\n")

    assert main(["--workers", "2", "montecarlo", "--config", config]) == EXIT_OK

    payload = json.loads(capsys.readouterr().out)
    assert payload["m"] == 5000
    assert payload["standard_errors"]["g_z"] > 0.0
    assert payload["report"]["gains"]["g_z"] == pytest.approx(0.6079, abs=0.05)


def test_causality(capsys: pytest.CaptureFixture) -> None:
    """Test 0.45 ms needs about 1.349e5 m of separation."""
    assert main(["causality", "--delta-t-ms", "0.45", "--lifetime-ms", "1"]) == EXIT_OK

    payload = json.loads(capsys.readouterr().out)
    assert payload["separation_m"] == pytest.approx(1.349e5, abs=0.001e5)
    assert payload["outlives_measurement"] is True


def test_causality_negative_duration_exits_2() -> None:
    """Test a negative duration is a domain error."""
    assert main(["causality", "--delta-t-ms", "-1"]) == EXIT_RUN_FAILURE
