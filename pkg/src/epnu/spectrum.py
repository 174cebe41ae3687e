"""Closed-form ro-vibrational levels of the hyperbolical potentials."""
import math
from dataclasses import dataclass

from .errors import DomainError, NonPhysicalError
from .nu_core import NUProblem
from .potential import EPParams, centrifugal_coeffs
from .units import lambda_kinetic


@dataclass(frozen=True)
class MoleculeSpec:
    name: str
    ep: EPParams
    mu: float

    def __post_init__(self):
        if not self.mu > 0:
            raise DomainError(f"reduced mass must be positive, got {self.mu!r}")

    @property
    def lam(self):
        """hbar^2/(2 mu) in cm^-1 A^2."""
        return lambda_kinetic(self.mu)

    @property
    def beta(self):
        """1/(lam alpha^2), so that 2 mu D/(hbar alpha)^2 == D * beta."""
        return 1.0 / (self.lam * self.ep.alpha**2)

    @property
    def coeffs(self):
        return centrifugal_coeffs(self.ep.alpha, self.ep.re, self.ep.branch)


@dataclass(frozen=True)
class SpectrumEntry:
    n: int
    l: int
    K: float
    Q: float
    S: float
    energy: float
    physical: bool

    @property
    def key(self):
        return (self.n, self.l)


def _rot(m, l):
    # l(l+1) / (4 alpha^2 re^2)
    return l * (l + 1) / (4.0 * m.ep.alpha**2 * m.ep.re**2)


def kqs(m, l):
    """Return (Q_l, S_l); S is NaN when its radicand is negative."""
    if l < 0:
        raise DomainError("l must be non-negative")
    ep, c = m.ep, m.coeffs
    Db = ep.D * m.beta
    rot = _rot(m, l)
    Q = -Db * ep.sigma * (ep.delta - ep.sigma) + rot * c.A1
    rad = Db * ep.sigma**2 + rot * c.A2 + 0.25
    S = math.sqrt(rad) if rad >= 0 else math.nan
    return Q, S


def threshold(m, l):
    """Effective dissociation limit De + lam l(l+1) A0 / re^2."""
    return m.ep.De + m.lam * l * (l + 1) * m.coeffs.A0 / m.ep.re**2


def energy_level(m, n, l):
    """Level (n, l) of the Pekeris-approximated radial problem.

    The energy is always filled in, even when the state is not a bound
    state; check ``physical`` before using it.  A level is physical when
    2K > 0, S is real, and the energy is non-negative (the exact effective
    potential is positive everywhere, so a negative level is an artefact of
    the centrifugal expansion).
    """
    if n < 0 or l < 0:
        raise DomainError("quantum numbers must be non-negative")
    ep, c = m.ep, m.coeffs
    Q, S = kqs(m, l)
    if math.isnan(S):
        return SpectrumEntry(n, l, math.nan, Q, S, math.nan, False)
    rot = _rot(m, l)
    nu = n + 0.5 + S
    two_k = (ep.D * m.beta * ep.sigma * ep.delta + rot * (c.A2 - c.A1) - nu * nu) / nu
    energy = (ep.De + m.lam * l * (l + 1) * c.A0 / ep.re**2
              - m.lam * ep.alpha**2 * two_k**2)
    physical = two_k > 0 and energy >= 0
    return SpectrumEntry(n, l, 0.5 * two_k, Q, S, energy, bool(physical))


def k_from_energy(m, l, energy):
    """K recomputed from an energy through its defining square root."""
    rad = 0.25 * m.beta * (threshold(m, l) - energy)
    return math.sqrt(rad) if rad >= 0 else math.nan


def s_wave_energy(m, n):
    """Pure vibrational level E_n (l = 0), evaluated on its own."""
    if n < 0:
        raise DomainError("n must be non-negative")
    ep = m.ep
    Db = ep.D * m.beta
    s = math.sqrt(Db * ep.sigma**2 + 0.25)
    bracket = (Db * ep.sigma * ep.delta - (s + n + 0.5) ** 2) / (s + n + 0.5)
    return ep.De - m.lam * ep.alpha**2 * bracket**2


def n_max(m):
    """Real-valued root of the s-wave bracket and its floor.

    Returns ``(value, floor)``; ``floor`` is -1 when there is no bound
    s-wave state at all.
    """
    ep = m.ep
    if ep.branch != "plus":
        raise DomainError("n_max is defined for the plus branch")
    Db = ep.D * m.beta
    a = 4.0 * Db * ep.sigma * ep.delta
    if a < 0:
        return math.nan, -1
    value = 0.5 * (math.sqrt(a) - math.sqrt(4.0 * Db * ep.sigma**2 + 1.0) - 1.0)
    return value, (math.floor(value) if value >= 0 else -1)


def transitions(m, n_list, allow_unphysical=False):
    """s-wave spacings E_{n,0} - E_{0,0} for each n in ``n_list``."""
    e0 = s_wave_energy(m, 0)
    out = []
    for n in n_list:
        if n < 0:
            raise DomainError("n must be non-negative")
        if not allow_unphysical and not energy_level(m, n, 0).physical:
            raise NonPhysicalError(
                f"level n={n}, l=0 of {m.name} is not a bound state; "
                "pass allow_unphysical=True to evaluate it anyway")
        out.append(s_wave_energy(m, n) - e0)
    return out


def spectrum_grid(m, n_values, l_values):
    return [energy_level(m, n, l) for n in n_values for l in l_values]


def nu_problem(entry):
    """The generic NU problem this level corresponds to."""
    K, Q, S = entry.K, entry.Q, entry.S
    return NUProblem(c1=1.0, c2=1.0, c3=1.0,
                     xi1=K * K + S * S - Q - 0.25,
                     xi2=2.0 * K * K - Q,
                     xi3=K * K)
