"""Physical constants and the few unit conversions needed downstream.

Internally energies are in cm^-1, lengths in Angstrom and masses in a.m.u.
The kinetic prefactor hbar^2/(2 mu) is carried as a single number in
cm^-1 * Angstrom^2 so that no other constants appear in the formulas.
"""
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class PhysicalConstants:
    """Rounded constants used for all table work.

    Attributes
    ----------
    amu_to_MeV : float
        Rest energy of one atomic mass unit, MeV.
    cm1_to_eV : float
        Energy of one wavenumber, eV.
    hbar_c : float
        hbar * c in eV * Angstrom.
    """

    amu_to_MeV: float = 931.502
    cm1_to_eV: float = 1.23985e-4
    hbar_c: float = 1973.29


CONSTANTS = PhysicalConstants()

_ENERGY_UNITS = ("cm-1", "eV")


def reduced_mass(m1, m2):
    """Reduced mass m1*m2/(m1+m2) in the units of the inputs."""
    if m1 <= 0 or m2 <= 0:
        raise DomainError(f"masses must be positive, got {m1!r}, {m2!r}")
    return m1 * m2 / (m1 + m2)


def lambda_kinetic(mu, constants=CONSTANTS):
    """hbar^2/(2 mu) in cm^-1 * Angstrom^2 for a reduced mass in a.m.u."""
    if mu <= 0:
        raise DomainError(f"reduced mass must be positive, got {mu!r}")
    mc2_eV = mu * constants.amu_to_MeV * 1e6
    return constants.hbar_c**2 / (2.0 * mc2_eV) / constants.cm1_to_eV


def _normalize_unit(unit):
    u = unit.strip().replace("^", "").replace("⁻¹", "-1")
    if u.lower() in ("cm-1", "cm1", "1/cm", "wavenumber"):
        return "cm-1"
    if u.lower() == "ev":
        return "eV"
    raise ValueError(f"unknown energy unit {unit!r}; expected one of {_ENERGY_UNITS}")


def energy_convert(value, from_unit, to_unit, constants=CONSTANTS):
    """Convert an energy between cm^-1 and eV."""
    src, dst = _normalize_unit(from_unit), _normalize_unit(to_unit)
    if src == dst:
        return value
    if src == "cm-1":
        return value * constants.cm1_to_eV
    return value / constants.cm1_to_eV
