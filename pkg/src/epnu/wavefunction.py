"""Radial bound-state wavefunctions and their normalization.

With x = exp(-2 alpha r) and z = +-x, the unnormalized radial function is

    R(r) = |z|**K (1 - z)**(S + 1/2) P_n^(2K, 2S)(1 - 2z)

For the minus branch z is negative; the constant phase of z**K is dropped
and the polynomial is evaluated from its terminating 2F1 form, which holds
outside [-1, 1] as well.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.special import gammaln

from .errors import ConvergenceError, NonPhysicalError, UnsupportedCaseError
from .special import hyp2f1_poly, hyp3f2_unit, jacobi, pochhammer

__all__ = [
    "RadialWavefunction", "radial", "normalize_quadrature", "normalize_series",
    "make_wavefunction", "overlap", "count_nodes", "total_s_wave",
    "jacobi", "hyp3f2_unit",
]

Y00 = 1.0 / math.sqrt(4.0 * math.pi)


def _require_physical(entry):
    if not entry.physical:
        raise NonPhysicalError(f"state n={entry.n}, l={entry.l} is not a bound state")


def _polynomial(m, entry, x):
    K, S, n = entry.K, entry.S, entry.n
    if m.ep.branch == "plus":
        return jacobi(n, 2 * K, 2 * S, 1.0 - 2.0 * x)
    scale = pochhammer(2 * K + 1, n) / math.factorial(n)
    return scale * hyp2f1_poly(-n, 2 * K + 2 * S + n + 1, 2 * K + 1, -x)


def _radial_x(m, entry, x):
    s = m.ep.sign
    K, S = entry.K, entry.S
    with np.errstate(divide="ignore"):
        envelope = np.exp(K * np.log(x) + (S + 0.5) * np.log1p(-s * x))
    return envelope * _polynomial(m, entry, x)


def radial(m, entry, r):
    """Unnormalized R_nl(r) for a physical level."""
    _require_physical(entry)
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise ValueError("r must be strictly positive")
    x = np.exp(-2.0 * m.ep.alpha * r_arr)
    out = _radial_x(m, entry, x)
    return out if r_arr.ndim else float(out)


def _log_weight(m, entry, x):
    # log of x^(2K-1) (1 - s x)^(2S+1) P(x)^2, the dx-measure integrand
    K, S = entry.K, entry.S
    p = _polynomial(m, entry, x)
    with np.errstate(divide="ignore"):
        return ((2 * K - 1) * np.log(x) + (2 * S + 1) * np.log1p(-m.ep.sign * x)
                + 2.0 * np.log(np.abs(p)))


def _x_integral(func_log, peak_x, epsrel):
    """Integrate exp(func_log(x)) over (0, 1); returns (log value, abserr/value)."""
    probe = np.linspace(1e-6, 1 - 1e-6, 4001)
    shift = np.max(func_log(probe))
    if not np.isfinite(shift):
        raise ConvergenceError("integrand is not finite on (0, 1)")

    def f(x):
        return math.exp(func_log(np.float64(x)) - shift) if 0.0 < x < 1.0 else 0.0

    val, err, info = integrate.quad(f, 0.0, 1.0, points=[peak_x], epsabs=0.0,
                                    epsrel=epsrel, limit=500, full_output=1)[:3]
    if not val > 0:
        raise ConvergenceError("normalization integral vanished")
    rel = err / val
    if rel > max(10 * epsrel, 1e-9):
        raise ConvergenceError(
            f"quadrature did not converge: estimate {val:.6g}, relative error {rel:.2g}, "
            f"{info['neval']} evaluations")
    return math.log(val) + shift, rel


def _peak(m, entry):
    probe = np.linspace(1e-6, 1 - 1e-6, 4001)
    return float(probe[np.argmax(_log_weight(m, entry, probe))])


def normalize_quadrature(m, entry, epsrel=1e-12):
    """N such that N**2 * int_0^inf R(r)**2 dr = 1, by adaptive quadrature.

    The integral is done in x = exp(-2 alpha r), where dr = dx / (2 alpha x).
    """
    _require_physical(entry)
    log_int, _ = _x_integral(lambda x: _log_weight(m, entry, x), _peak(m, entry), epsrel)
    return math.exp(-0.5 * (log_int - math.log(2.0 * m.ep.alpha)))


def normalize_series(m, entry):
    """N from a finite hypergeometric sum (plus branch).

    Expanding one Jacobi factor as a terminating 2F1 and integrating term
    by term against the other gives

        N**-2 = ((2K+1)_n / n!)**2 B(2K+1, 2S+2) / (2 alpha)
                * sum_{j=0..n} (-n)_j (n+1+2K+2S)_j
                  / (j! (2K+j) (2K+2S+2)_j) * f_j

    with f_j = 3F2(2K+j, -n, n+1+2(K+S); j+2(K+S+1), 1+2K; 1).
    """
    _require_physical(entry)
    if m.ep.branch != "plus":
        raise UnsupportedCaseError("series normalization is implemented for the plus branch")
    K, S, n = entry.K, entry.S, entry.n
    a, c = n + 1 + 2 * (K + S), 2 * (K + S + 1)
    terms = []
    for j in range(n + 1):
        f = hyp3f2_unit(2 * K + j, -n, a, j + c, 1 + 2 * K)
        t = pochhammer(-n, j) * pochhammer(a, j) / (
            math.factorial(j) * (2 * K + j) * pochhammer(c, j))
        terms.append(t * f)
    total = math.fsum(terms)
    if not total > 0:
        raise ConvergenceError("series normalization sum is not positive")
    log_beta = gammaln(2 * K + 1) + gammaln(2 * S + 2) - gammaln(2 * K + 2 * S + 2)
    log_pref = 2.0 * math.log(pochhammer(2 * K + 1, n) / math.factorial(n))
    log_inv = log_pref + log_beta + math.log(total) - math.log(2.0 * m.ep.alpha)
    return math.exp(-0.5 * log_inv)


@dataclass(frozen=True)
class RadialWavefunction:
    """Normalized radial function of one level."""

    molecule: object
    entry: object
    norm: float

    @property
    def shape(self):
        """(K, S + 1/2, n, 2K, 2S): exponents, degree and Jacobi parameters."""
        e = self.entry
        return e.K, e.S + 0.5, e.n, 2 * e.K, 2 * e.S

    def __call__(self, r):
        return self.norm * radial(self.molecule, self.entry, r)

    def on_x(self, x):
        return self.norm * _radial_x(self.molecule, self.entry, x)


def make_wavefunction(m, entry, method="quadrature"):
    if method == "quadrature":
        norm = normalize_quadrature(m, entry)
    elif method == "series":
        norm = normalize_series(m, entry)
    else:
        raise ValueError(f"unknown normalization method {method!r}")
    return RadialWavefunction(m, entry, norm)


def overlap(wf1, wf2, epsrel=1e-12):
    """int_0^inf R1(r) R2(r) dr for two wavefunctions of the same molecule."""
    m = wf1.molecule
    inv2a = 1.0 / (2.0 * m.ep.alpha)

    def f(x):
        if not 0.0 < x < 1.0:
            return 0.0
        return float(wf1.on_x(x) * wf2.on_x(x)) / x * inv2a

    pts = sorted({_peak(m, wf1.entry), _peak(m, wf2.entry)})
    val, _ = integrate.quad(f, 0.0, 1.0, points=pts, epsabs=1e-14,
                            epsrel=epsrel, limit=500)
    return val


def count_nodes(wf, r=None, rel_floor=1e-10):
    """Sign changes of R on a fine grid, ignoring the negligible tails."""
    if r is None:
        x = np.linspace(1e-9, 1 - 1e-9, 200001)
        vals = wf.on_x(x)
    else:
        vals = wf(r)
    big = np.abs(vals) > rel_floor * np.max(np.abs(vals))
    signs = np.sign(vals[big])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def total_s_wave(wf, r):
    """psi(r) = R(r)/r * Y00 for an s-wave level."""
    if wf.entry.l != 0:
        raise UnsupportedCaseError("only the l = 0 angular factor is provided")
    r = np.asarray(r, dtype=float)
    return wf(r) / r * Y00
