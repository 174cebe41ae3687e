"""Parametric Nikiforov-Uvarov solver for the equation family

    R'' + (c1 - c2 z) / (z (1 - c3 z)) R'
        + (-xi1 z**2 + xi2 z - xi3) / (z (1 - c3 z))**2 R = 0

on z in [0, 1/c3].  Polynomial solutions are Jacobi polynomials
P_n^(c10, c11)(1 - 2 c3 z) multiplied by z**c12 (1 - c3 z)**c13, and the
eigenvalue condition is a single scalar equation (:func:`energy_residual`).

Only the ``k_-`` root of the discriminant condition is used; the other
root does not give a negative tau'.
"""
import math
from dataclasses import dataclass

from .errors import DomainError, NonPhysicalError


@dataclass(frozen=True)
class NUProblem:
    c1: float
    c2: float
    c3: float
    xi1: float
    xi2: float
    xi3: float

    def __post_init__(self):
        if self.c3 == 0:
            raise DomainError("c3 must be non-zero")


@dataclass(frozen=True)
class NUSolution:
    c4: float
    c5: float
    c6: float
    c7: float
    c8: float
    c9: float
    c10: float
    c11: float
    c12: float
    c13: float
    k_minus: float
    tau_prime: float
    physical: bool

    @property
    def sqrt_c8(self):
        return math.sqrt(self.c8) if self.c8 >= 0 else math.nan

    @property
    def sqrt_c9(self):
        return math.sqrt(self.c9) if self.c9 >= 0 else math.nan


def derive(p):
    """Auxiliary constants c4..c13, k_- and tau' for a problem.

    Never raises on a non-physical regime; the ``physical`` flag is cleared
    instead (negative c8 or c9, tau' >= 0, or an exponent condition broken).
    """
    c4 = 0.5 * (1.0 - p.c1)
    c5 = 0.5 * (p.c2 - 2.0 * p.c3)
    c6 = c5 * c5 + p.xi1
    c7 = 2.0 * c4 * c5 - p.xi2
    c8 = c4 * c4 + p.xi3
    c9 = p.c3 * (c7 + p.c3 * c8) + c6

    real = c8 >= 0 and c9 >= 0
    r8 = math.sqrt(c8) if c8 >= 0 else math.nan
    r9 = math.sqrt(c9) if c9 >= 0 else math.nan

    k_minus = -(c7 + 2.0 * p.c3 * c8) - 2.0 * r8 * r9
    c10 = p.c1 + 2.0 * c4 + 2.0 * r8 - 1.0
    c11 = 1.0 - p.c1 - 2.0 * c4 + 2.0 / p.c3 * r9
    c12 = c4 + r8
    c13 = -c4 + (r9 - c5) / p.c3
    tau_prime = -2.0 * p.c3 - 2.0 * (r9 + p.c3 * r8)

    physical = bool(
        real and tau_prime < 0 and c10 > -1 and c11 > -1 and c12 > 0 and c13 > 0
    )
    return NUSolution(c4, c5, c6, c7, c8, c9, c10, c11, c12, c13,
                      k_minus, tau_prime, physical)


def energy_residual(n, p, sol=None):
    """Left-hand side of the parametric energy equation at quantum number n.

    Zero exactly when n is a bound-state index of the problem.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    sol = derive(p) if sol is None else sol
    if not (sol.c8 >= 0 and sol.c9 >= 0):
        raise NonPhysicalError("c8 and c9 must be non-negative to form the energy equation")
    r8, r9 = math.sqrt(sol.c8), math.sqrt(sol.c9)
    m = 2 * n + 1
    return ((p.c2 - p.c3) * n + p.c3 * n * n - m * sol.c5
            + m * (r9 + p.c3 * r8) + sol.c7 + 2.0 * p.c3 * sol.c8 + 2.0 * r8 * r9)


def wavefunction_shape(p, sol=None):
    """Return (c12, c13, c10, c11): the two power-law exponents and the two
    Jacobi parameters of the unnormalized solution."""
    sol = derive(p) if sol is None else sol
    if not sol.physical:
        raise NonPhysicalError("wavefunction exponents violate the bound-state conditions")
    return sol.c12, sol.c13, sol.c10, sol.c11
