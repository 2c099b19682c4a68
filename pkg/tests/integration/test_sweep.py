"""
Integration tests for steady-state sweeps and their CSV output.
"""

from pathlib import Path
from typing import List

import pytest

from src.application.services.simulation_service import (
    MONTE_CARLO_HEADER,
    SWEEP_HEADER,
    SimulationService,
    SweepRow,
    emit_csv,
)
from src.presentation.cli.config_parser import parse_config
from src.presentation.cli.schemas import SweepConfig


@pytest.fixture(scope="module")
def radiative_sweep() -> SweepConfig:
    """d = 30, pure radiative, Z in [1, 4] on 300 log-spaced points."""
    return parse_config("gamma_d_add = 0")


def _minimum(rows: List[SweepRow], quantity: str) -> SweepRow:
    return min(rows, key=lambda row: getattr(row, quantity))


def test_sweep_minima_are_interior(radiative_sweep: SweepConfig) -> None:
    """Test min E ~ 0.912 at Z ~ 1.44 and min xi ~ 0.580 at Z ~ 1.54."""
    result = SimulationService().run_sweep(radiative_sweep)
    rows = result.rows

    assert len(rows) == 300
    assert all(row.ok for row in rows)

    best_e = _minimum(rows, "E_epr_inf")
    best_xi = _minimum(rows, "xi_inf")
    assert best_e.E_epr_inf == pytest.approx(0.912, abs=2e-3)
    assert best_e.Z == pytest.approx(1.44, abs=0.03)
    assert best_xi.xi_inf == pytest.approx(0.580, abs=2e-3)
    assert best_xi.Z == pytest.approx(1.54, abs=0.03)
    assert rows[0].Z < best_e.Z < rows[-1].Z
    assert rows[0].Z < best_xi.Z < rows[-1].Z

    reported = {minimum.quantity: minimum for minimum in result.minima}
    assert reported["E_epr_inf"].value == best_e.E_epr_inf
    assert reported["xi_inf"].z == best_xi.Z


def test_sweep_first_row_is_unsqueezed(radiative_sweep: SweepConfig) -> None:
    """Test the Z = 1 row sits on every bound with no flag raised."""
    row = SimulationService().run_sweep(radiative_sweep).rows[0]

    assert row.Z == 1.0
    assert row.xi_inf == pytest.approx(1.0)
    assert row.E_epr_inf == pytest.approx(1.0)
    assert row.g_opt == 0.0
    assert not (row.entangled or row.epr_ab or row.epr_via_sum)


def test_sweep_point_z2() -> None:
    """Test the Z = 2 point against the closed-form values."""
    cfg = parse_config("z_min = 2\nz_max = 2\nz_steps = 1\ngamma_d_add = 0")
    row = SimulationService().run_sweep(cfg).rows[0]

    assert row.g_opt == pytest.approx(0.607855, rel=1e-4)
    assert row.xi_inf == pytest.approx(0.833318, rel=1e-4)
    assert row.E_epr_inf == pytest.approx(1.33982, rel=1e-4)
    assert row.p2 == pytest.approx(1.0 / 2.125)
    assert row.entangled
    assert not row.epr_ab


def test_additional_dephasing_degrades_witnesses() -> None:
    """Test each extra dephasing curve lies above the previous one."""
    cfg = parse_config("z_steps = 60\ngamma_d_add = 0, 2, 5")
    result = SimulationService().run_sweep(cfg)

    minima = {
        (minimum.gamma_d_add, minimum.quantity): minimum.value for minimum in result.minima
    }
    for quantity in ("E_epr_inf", "xi_inf"):
        assert minima[0.0, quantity] < minima[2.0, quantity] < minima[5.0, quantity]


def test_epr_parameter_never_improves_with_dephasing() -> None:
    """Test E is non-decreasing in gamma_d_add at every Z, while entanglement can outlive EPR."""
    rates = (0.0, 1.0, 2.0, 5.0)
    cfg = parse_config("z_steps = 50\ngamma_d_add = " + ", ".join(str(r) for r in rates))
    rows = SimulationService().run_sweep(cfg).rows
    curves = {rate: [row for row in rows if row.gamma_d_add == rate] for rate in rates}

    for lower, higher in zip(rates, rates[1:]):
        for a, b in zip(curves[lower], curves[higher]):
            assert a.Z == b.Z
            assert b.E_epr_inf >= a.E_epr_inf - 1e-12
    assert any(row.xi_inf < 1.0 and row.E_epr_inf >= 1.0 for row in curves[5.0])


def test_sweep_normalized_columns_do_not_depend_on_atom_number() -> None:
    """Test xi, E and g are invariant under N."""
    small = SimulationService().run_sweep(parse_config("z_steps = 20\nN = 1e4")).rows
    large = SimulationService().run_sweep(parse_config("z_steps = 20\nN = 1e8")).rows

    for a, b in zip(small, large):
        assert a.xi_inf == pytest.approx(b.xi_inf, rel=1e-12)
        assert a.E_epr_inf == pytest.approx(b.E_epr_inf, rel=1e-12)
        assert a.g_opt == pytest.approx(b.g_opt, rel=1e-12)


def test_sweep_records_failures_and_continues() -> None:
    """Test points without a mean spin are marked failed instead of aborting."""
    cfg = parse_config(
        "z_steps = 5\ngamma_d_add = 0\npopulation_model = fixed\npopulation_fixed = 0"
    )
    result = SimulationService().run_sweep(cfg)

    assert len(result.rows) == 5
    assert all(row.status == "failed:UndefinedBoundError" for row in result.rows)
    assert result.minima == []


def test_emit_csv_header_and_determinism(test_output_dir: Path) -> None:
    """Test the exact header and byte-identical output across runs and worker counts."""
    cfg = parse_config("z_steps = 25")

    serial = emit_csv(SimulationService(workers=1).run_sweep(cfg).rows, test_output_dir / "a.csv")
    threaded = emit_csv(
        SimulationService(workers=4).run_sweep(cfg).rows, test_output_dir / "b.csv"
    )

    lines = serial.read_text(encoding="utf-8").split("\n")
    assert lines[0] == ",".join(SWEEP_HEADER)
    assert lines[0] == (
        "Z,mu,nu,p2,gamma_d_add,g_opt,var_inf_z,var_inf_y,xi_inf,xi_g_inf,"
        "E_epr_inf,entangled,epr_ab,epr_via_sum,status"
    )
    assert len(lines) == 1 + 75 + 1  # header, rows, trailing newline
    assert serial.read_bytes() == threaded.read_bytes()


def test_emit_csv_without_rows(test_output_dir: Path) -> None:
    """Test an empty sweep writes the header only."""
    path = emit_csv([], test_output_dir / "empty.csv")

    assert path.read_text(encoding="utf-8") == ",".join(SWEEP_HEADER) + "\n"


def test_monte_carlo_columns_are_appended_and_reproducible(test_output_dir: Path) -> None:
    """Test mc_samples adds six estimate columns that replay under any scheduling."""
    cfg = parse_config("z_min = 1.5\nz_max = 2\nz_steps = 3\ngamma_d_add = 0\nmc_samples = 20000")

    first = SimulationService(workers=1).run_sweep(cfg).rows
    second = SimulationService(workers=3).run_sweep(cfg).rows
    a = emit_csv(first, test_output_dir / "mc_a.csv")
    b = emit_csv(second, test_output_dir / "mc_b.csv")

    header = a.read_text(encoding="utf-8").split("\n")[0]
    assert header == ",".join(SWEEP_HEADER + MONTE_CARLO_HEADER)
    assert a.read_bytes() == b.read_bytes()

    for row in first:
        assert row.monte_carlo is not None
        assert abs(row.monte_carlo.xi - row.xi_inf) < 5 * row.monte_carlo.xi_se
        assert abs(row.monte_carlo.e_epr - row.E_epr_inf) < 5 * row.monte_carlo.e_epr_se
