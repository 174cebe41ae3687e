"""Hyperbolical empirical potentials, the Morse potential, and the
Pekeris-type expansion of the centrifugal barrier.

Both branches are written in terms of ``x = exp(-2*alpha*r)`` and the
branch sign ``s`` (+1 for V+, -1 for V-)::

    coth(alpha r)**s = (1 + s x) / (1 - s x)

which never overflows for large ``r``.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

BRANCHES = ("plus", "minus")


def branch_sign(branch):
    if branch == "plus":
        return 1
    if branch == "minus":
        return -1
    raise ValueError(f"branch must be 'plus' or 'minus', got {branch!r}")


@dataclass(frozen=True)
class EPParams:
    """Parameters of one hyperbolical potential.

    ``re`` is the spectroscopic equilibrium distance, supplied on its own.
    It is what the centrifugal expansion is centred on; it is *not* derived
    from (sigma, delta, alpha), see :func:`ep_equilibrium`.
    """

    De: float
    sigma: float
    delta: float
    alpha: float
    re: float
    branch: str = "plus"

    def __post_init__(self):
        branch_sign(self.branch)
        if not self.alpha > 0:
            raise DomainError(f"alpha must be positive, got {self.alpha!r}")
        if not self.re > 0:
            raise DomainError(f"re must be positive, got {self.re!r}")
        if not self.De > 0:
            raise DomainError(f"De must be positive, got {self.De!r}")
        if self.branch == "plus" and not (0 <= self.sigma < self.delta):
            raise DomainError("plus branch requires 0 <= sigma < delta")
        if self.branch == "minus" and not (self.sigma < self.delta <= 0):
            raise DomainError("minus branch requires sigma < delta <= 0")

    @property
    def sign(self):
        return branch_sign(self.branch)

    @property
    def D(self):
        """Scale factor D = De / (delta - sigma)**2."""
        return self.De / (self.delta - self.sigma) ** 2


@dataclass(frozen=True)
class CentrifugalCoeffs:
    A0: float
    A1: float
    A2: float


def _check_r(r):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be strictly positive")
    return r


def _scalar_or_array(out, r):
    return float(out) if np.ndim(r) == 0 else out


def ep_evaluate(p, r):
    """V(r) = D [delta - sigma coth(alpha r)**(+-1)]**2 in cm^-1."""
    rr = _check_r(r)
    s = p.sign
    x = np.exp(-2.0 * p.alpha * rr)
    hyp = (1.0 + s * x) / (1.0 - s * x)
    out = p.D * (p.delta - p.sigma * hyp) ** 2
    return _scalar_or_array(out, r)


def ep_equilibrium(p):
    """Position of the zero of V, (1/alpha) artanh((sigma/delta)**(+-1)).

    Only a diagnostic: for the tabulated Ar2 fit this does not reproduce
    the spectroscopic ``re``.
    """
    if p.branch == "plus":
        arg = p.sigma / p.delta
    else:
        if p.sigma == 0:
            raise DomainError("minus branch needs sigma != 0")
        arg = p.delta / p.sigma
    if not -1.0 < arg < 1.0:
        raise DomainError(f"artanh argument {arg!r} outside (-1, 1)")
    return float(np.arctanh(arg) / p.alpha)


def morse_evaluate(D, alpha, re, r):
    """Morse potential D [1 - exp(-alpha (r - re))]**2."""
    rr = _check_r(r)
    out = D * (-np.expm1(-alpha * (rr - re))) ** 2
    return _scalar_or_array(out, r)


def centrifugal_coeffs(alpha, re, branch="plus"):
    """Expansion coefficients A0, A1, A2 of l(l+1)/r**2 around ``re``."""
    if not alpha * re > 0:
        raise DomainError("alpha * re must be positive")
    s = branch_sign(branch)
    x = 2.0 * alpha * re
    q = 1.0 - s * np.exp(-x)
    f = q / x
    g = np.exp(x) - s
    A0 = 1.0 - f**2 * (4.0 * x / q - (3.0 + x))
    A1 = s * 2.0 * g * (3.0 * f - (3.0 + x) * f**2)
    A2 = g**2 * f**2 * (3.0 + x - 2.0 * x / q)
    return CentrifugalCoeffs(float(A0), float(A1), float(A2))


def pekeris_variable(r, alpha, branch="plus"):
    """y = +-exp(-2 alpha r) / (1 -+ exp(-2 alpha r))."""
    s = branch_sign(branch)
    x = np.exp(-2.0 * alpha * np.asarray(r, dtype=float))
    return s * x / (1.0 - s * x)


def centrifugal_approx(r, l, re, alpha, c, branch="plus"):
    """Pekeris-type approximant of l(l+1)/r**2, in Angstrom^-2."""
    rr = _check_r(r)
    if l < 0:
        raise DomainError("l must be non-negative")
    y = pekeris_variable(rr, alpha, branch)
    out = l * (l + 1) / re**2 * (c.A0 + c.A1 * y + c.A2 * y * y)
    return _scalar_or_array(out, r)
