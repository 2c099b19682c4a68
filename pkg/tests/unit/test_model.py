"""
Unit tests for squeezing parameters, rate algebra and the population model.
"""

import math

import pytest

from src.domain.exceptions import DegenerateModelError, ParameterDomainError
from src.domain.model import (
    ModelParams,
    PopulationMode,
    PopulationModel,
    RateSet,
    SqueezeParams,
    p2_steady,
    rates_from_squeeze,
    squeeze_from_Z,
)


def test_squeeze_from_z_two() -> None:
    """Test Z = 2 gives mu = 1.25, nu = 0.75."""
    sq = squeeze_from_Z(2.0)

    assert sq.mu == pytest.approx(1.25)
    assert sq.nu == pytest.approx(0.75)
    assert sq.r == pytest.approx(math.log(2.0))
    assert sq.weight == pytest.approx(2.125)


def test_squeeze_from_z_one_is_unsqueezed() -> None:
    """Test Z = 1 gives mu = 1, nu = 0."""
    sq = squeeze_from_Z(1.0)

    assert sq.mu == 1.0
    assert sq.nu == 0.0
    assert sq.r == 0.0


@pytest.mark.parametrize("Z", [0.5, 0.0, -1.0, math.inf, math.nan])
def test_squeeze_from_z_rejects_invalid(Z: float) -> None:
    """Test Z < 1 and non-finite Z are rejected."""
    with pytest.raises(ParameterDomainError):
        squeeze_from_Z(Z)


def test_squeeze_params_hyperbolic_identity_enforced() -> None:
    """Test mu^2 - nu^2 = 1 is checked on construction."""
    with pytest.raises(ParameterDomainError):
        SqueezeParams(mu=1.3, nu=0.75, r=math.log(2.0), Z=2.0)


def test_squeeze_from_r_matches_from_z() -> None:
    """Test mu = cosh r, nu = sinh r."""
    sq = SqueezeParams.from_r(0.5)

    assert sq.mu == pytest.approx(math.cosh(0.5))
    assert sq.nu == pytest.approx(math.sinh(0.5))
    assert sq.Z == pytest.approx(math.exp(0.5))


def test_rates_pure_radiative_z2() -> None:
    """Test the rate algebra at Z = 2, d = 30."""
    rates = rates_from_squeeze(squeeze_from_Z(2.0), d=30.0)

    assert rates.gamma_cool == pytest.approx(1.5625)
    assert rates.gamma_heat == pytest.approx(0.5625)
    assert rates.gamma_d_rad == pytest.approx(4.25)
    assert rates.gamma_d == rates.gamma_d_rad
    assert rates.gamma_tilde == pytest.approx(6.375)


def test_rates_additional_dephasing_adds_linearly() -> None:
    """Test gamma_d_add enters gamma_d and gamma_tilde."""
    base = rates_from_squeeze(squeeze_from_Z(2.0))
    extra = rates_from_squeeze(squeeze_from_Z(2.0), gamma_d_add=2.0)

    assert extra.gamma_d == pytest.approx(base.gamma_d + 2.0)
    assert extra.gamma_tilde == pytest.approx(base.gamma_tilde + 2.0)


def test_rates_reject_negative_inputs() -> None:
    """Test negative dephasing, depth and non-positive gamma are rejected."""
    sq = squeeze_from_Z(2.0)
    with pytest.raises(ParameterDomainError):
        rates_from_squeeze(sq, gamma_d_add=-1.0)
    with pytest.raises(ParameterDomainError):
        rates_from_squeeze(sq, d=-1.0)
    with pytest.raises(ParameterDomainError):
        rates_from_squeeze(sq, gamma=0.0)


def test_rate_set_sum_identity_enforced() -> None:
    """Test a rate set with inconsistent totals is rejected."""
    with pytest.raises(ParameterDomainError):
        RateSet(
            gamma=1.0,
            gamma_cool=1.0,
            gamma_heat=0.0,
            gamma_d_rad=2.0,
            gamma_d_add=0.0,
            gamma_d=2.0,
            gamma_tilde=4.0,
            d=30.0,
        )


@pytest.mark.parametrize("Z", [1.0, 1.5, 2.0, 3.7])
def test_derived_population_is_inverse_weight(Z: float) -> None:
    """Test P2 = (mu^2 - nu^2)/(mu^2 + nu^2) = 1/(mu^2 + nu^2)."""
    p = ModelParams.from_z(Z)

    assert p2_steady(p) == pytest.approx(1.0 / p.squeeze.weight)


def test_fixed_population_is_returned_verbatim() -> None:
    """Test fixed mode ignores the rates."""
    pop = PopulationModel(PopulationMode.FIXED, 0.3)
    p = ModelParams.from_z(2.0, pop=pop)

    assert p2_steady(p) == 0.3


def test_fixed_population_requires_value_in_unit_interval() -> None:
    """Test fixed mode validation."""
    with pytest.raises(ParameterDomainError):
        PopulationModel(PopulationMode.FIXED)
    with pytest.raises(ParameterDomainError):
        PopulationModel(PopulationMode.FIXED, 1.5)


def test_derived_population_degenerate_without_cooling_or_heating() -> None:
    """Test zero cooling + heating has no defined population."""
    rates = RateSet.build(
        gamma=1.0, gamma_cool=0.0, gamma_heat=0.0, gamma_d_rad=0.0, gamma_d_add=1.0, d=30.0
    )
    with pytest.raises(DegenerateModelError):
        PopulationModel().steady_value(rates)


def test_model_params_reject_non_positive_atom_number() -> None:
    """Test N must be positive."""
    with pytest.raises(ParameterDomainError):
        ModelParams.from_z(2.0, N=0.0)


def test_with_atom_number_keeps_rates() -> None:
    """Test with_atom_number copies everything but N."""
    p = ModelParams.from_z(2.0)
    q = p.with_atom_number(1e4)

    assert q.N == 1e4
    assert q.rates == p.rates
    assert q.squeeze == p.squeeze


@pytest.mark.parametrize("Z", [1.0, 1.5, 2.0, 4.0, 8.0])
def test_squeeze_from_z_round_trip(Z: float) -> None:
    """Test squeeze_from_Z(1 / (mu - nu)) recovers mu and nu."""
    sq = squeeze_from_Z(Z)
    back = squeeze_from_Z(1.0 / (sq.mu - sq.nu))

    assert back.mu == pytest.approx(sq.mu, rel=1e-12)
    assert back.nu == pytest.approx(sq.nu, rel=1e-12, abs=1e-15)


def test_gamma_tilde_closed_form() -> None:
    """Test gamma_tilde = 3 (mu^2 + nu^2) gamma + gamma_d_add."""
    for Z in (1.0, 1.7, 3.2):
        for gamma_d_add in (0.0, 2.0, 5.0):
            sq = squeeze_from_Z(Z)
            rates = rates_from_squeeze(sq, gamma=1.5, gamma_d_add=gamma_d_add)
            expected = 3.0 * sq.weight * 1.5 + gamma_d_add
            assert rates.gamma_tilde == pytest.approx(expected, rel=1e-12)


def test_derived_population_is_non_increasing_in_nu() -> None:
    """Test more heating never raises the steady polarization."""
    grid = [ModelParams.from_z(Z) for Z in [1.0 + 0.1 * i for i in range(60)]]
    nus = [p.squeeze.nu for p in grid]
    populations = [p2_steady(p) for p in grid]

    assert nus == sorted(nus)
    assert all(later <= earlier for earlier, later in zip(populations, populations[1:]))
    assert populations[0] == 1.0
    assert populations[-1] < 0.1
