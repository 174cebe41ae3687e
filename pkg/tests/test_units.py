import math

import pytest
from hypothesis import given, strategies as st

from epnu.errors import DomainError
from epnu.units import CONSTANTS, energy_convert, lambda_kinetic, reduced_mass

# mpmath, 40 digits: 1973.29**2 / (2 mu 931.502e6) / 1.23985e-4
LAMBDA_H2 = 33.44321689038982
LAMBDA_AR2 = 0.8436791753217423


def test_constants_are_the_rounded_table_values():
    assert CONSTANTS.amu_to_MeV == 931.502
    assert CONSTANTS.cm1_to_eV == 1.23985e-4
    assert CONSTANTS.hbar_c == 1973.29
    with pytest.raises(Exception):
        CONSTANTS.hbar_c = 1.0


def test_reduced_mass():
    assert reduced_mass(2.0, 2.0) == 1.0
    assert reduced_mass(1.0, 1e15) == pytest.approx(1.0, rel=1e-14)
    with pytest.raises(DomainError):
        reduced_mass(0.0, 1.0)
    with pytest.raises(DomainError):
        reduced_mass(1.0, -2.0)


@pytest.mark.parametrize("mu, expected", [(0.50407, LAMBDA_H2), (19.9812, LAMBDA_AR2)])
def test_lambda_kinetic(mu, expected):
    assert lambda_kinetic(mu) == pytest.approx(expected, rel=1e-14)


def test_lambda_kinetic_scaling():
    assert lambda_kinetic(2.0) == pytest.approx(0.5 * lambda_kinetic(1.0), rel=1e-15)
    with pytest.raises(DomainError):
        lambda_kinetic(0.0)


@given(st.floats(min_value=1e-3, max_value=1e4))
def test_lambda_times_mu_is_constant(mu):
    assert lambda_kinetic(mu) * mu == pytest.approx(lambda_kinetic(1.0), rel=1e-14)


def test_energy_convert():
    assert energy_convert(1.0, "cm-1", "eV") == 1.23985e-4
    assert energy_convert(0.0, "eV", "cm-1") == 0.0
    with pytest.raises(ValueError):
        energy_convert(1.0, "cm-1", "kelvin")


@given(st.floats(min_value=-1e6, max_value=1e6).filter(lambda v: v == 0 or abs(v) > 1e-290))
def test_energy_round_trip(x):
    back = energy_convert(energy_convert(x, "cm-1", "eV"), "eV", "cm-1")
    assert back == x or math.isclose(back, x, rel_tol=0, abs_tol=2 * math.ulp(x))
