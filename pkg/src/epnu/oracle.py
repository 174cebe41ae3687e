"""Independent eigenvalue check: Numerov shooting with node-count bisection.

The closed-form levels solve the radial equation with the centrifugal term
replaced by its Pekeris-type expansion.  This module solves the same
equation numerically, and the one with the exact l(l+1)/r**2 term, so both
the algebra and the approximation can be checked.
"""
from dataclasses import dataclass, field

import numpy as np

from ._kernels import numerov_node_count, numerov_sweep
from .errors import ConvergenceError, DomainError, NoBoundStateError
from .potential import centrifugal_approx, ep_evaluate
from .spectrum import energy_level

MATCH_TOL = 1e-8
DEFAULT_POINTS = 20001
WKB_DEPTH = 40.0
STABILITY = 0.05


@dataclass(frozen=True)
class RadialGrid:
    r_min: float
    r_max: float
    points: int = DEFAULT_POINTS

    def __post_init__(self):
        if not 0 < self.r_min < self.r_max:
            raise DomainError("need 0 < r_min < r_max")
        if self.points < 1000:
            raise DomainError("a radial grid needs at least 1000 points")

    @property
    def r(self):
        return np.linspace(self.r_min, self.r_max, self.points)

    @property
    def step(self):
        return (self.r_max - self.r_min) / (self.points - 1)


@dataclass(frozen=True)
class OracleResult:
    n: int
    l: int
    energy: float
    node_count: int
    converged: bool
    residual: float
    bracket: float = field(default=np.nan, compare=False)


def effective_potential(m, l, centrifugal="approx"):
    """V(r) + lam * (centrifugal term) as a callable in cm^-1."""
    ep, lam = m.ep, m.lam
    if centrifugal == "approx":
        coeffs = m.coeffs

        def v(r):
            return ep_evaluate(ep, r) + lam * centrifugal_approx(
                r, l, ep.re, ep.alpha, coeffs, ep.branch)
    elif centrifugal == "exact":
        def v(r):
            return ep_evaluate(ep, r) + lam * l * (l + 1) / np.asarray(r) ** 2
    else:
        raise ValueError(f"centrifugal must be 'approx' or 'exact', got {centrifugal!r}")
    return v


def _wkb_inner_edge(v, lam, e_top, r_hi, depth=WKB_DEPTH):
    # smallest r we need: the wavefunction has decayed by exp(-depth) there
    r = np.geomspace(r_hi * 1e-5, r_hi, 20000)
    vals = v(r)
    allowed = np.nonzero(vals < e_top)[0]
    if allowed.size == 0:
        raise NoBoundStateError("effective potential never drops below the threshold")
    i = allowed[0]
    kappa = np.sqrt(np.maximum(vals[: i + 1] - e_top, 0.0) / lam)
    seg = 0.5 * (kappa[1:] + kappa[:-1]) * np.diff(r[: i + 1])
    depth_left = np.cumsum(seg[::-1])[::-1]
    deep = np.nonzero(depth_left >= depth)[0]
    return float(r[deep[-1]]) if deep.size else float(r[0])


def _stable_inner_edge(v, lam, r_max, points, limit=STABILITY):
    # smallest r where h^2 (V - Vmin) / (12 lam) stays below ``limit``
    r = np.geomspace(r_max * 1e-5, r_max, 20000)
    vals = v(r)
    h = r_max / (points - 1)
    ok = np.nonzero(h * h * (vals - vals.min()) / (12.0 * lam) <= limit)[0]
    return float(r[ok[0]])


def default_grid(m, l=0, centrifugal="approx", points=DEFAULT_POINTS):
    """Grid running from inside the repulsive wall to re + 40/alpha.

    The inner edge is where the WKB decay exponent at the dissociation
    threshold reaches 40, moved outward if needed so the Numerov factor
    h^2 (V - E) / 12 lam stays small on the wall.
    """
    ep = m.ep
    r_max = ep.re + 40.0 / ep.alpha
    v = effective_potential(m, l, centrifugal)
    e_top = float(v(np.array([r_max]))[0])
    r_min = max(1e-4, _wkb_inner_edge(v, m.lam, e_top, r_max),
                _stable_inner_edge(v, m.lam, r_max, points))
    return RadialGrid(r_min, r_max, points)


def _matching_residual(v, h, energy, lam):
    n = v.shape[0]
    inside = np.nonzero(v < energy)[0]
    m = int(inside[-1]) if inside.size else n // 2
    m = min(max(m, 2), n - 3)
    out = numerov_sweep(v, h, energy, lam, 0, m + 2, 1)
    inn = numerov_sweep(v, h, energy, lam, n - 1, m - 1, -1)
    if out[m] == 0.0 or inn[m] == 0.0:
        return np.inf
    q_out = out[m + 1] / out[m]
    q_in = inn[m + 1] / inn[m]
    return abs(q_out - q_in) / max(abs(q_out), abs(q_in))


def solve_radial(effective_potential, lam, n, grid, tol=1e-6, l=0, max_iter=200):
    """Energy of the bound state with ``n`` nodes of -lam u'' + V u = E u.

    ``effective_potential`` must already contain any centrifugal term.
    Bisection on the node count brackets the level; it is continued to
    floating-point resolution, after which the outward and inward
    solutions are compared at the outer turning point.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    r = grid.r
    v = np.ascontiguousarray(effective_potential(r), dtype=float)
    if not np.all(np.isfinite(v)):
        raise DomainError("effective potential is not finite on the grid")
    h = grid.step
    lo, hi = float(v.min()), float(v[-1])
    if np.max((v - lo) / lam) * h * h / 12.0 >= 1.0:
        raise ConvergenceError(
            "grid too coarse for the Numerov recursion at the inner edge; "
            "raise r_min or the number of points")
    if numerov_node_count(v, h, hi, lam) <= n:
        raise NoBoundStateError(f"no bound state with {n} nodes below {hi:.6g}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if numerov_node_count(v, h, mid, lam) > n:
            hi = mid
        else:
            lo = mid
    energy = 0.5 * (lo + hi)
    residual = _matching_residual(v, h, energy, lam)
    nodes = numerov_node_count(v, h, lo, lam)
    converged = (hi - lo) < tol and residual < MATCH_TOL and nodes == n
    return OracleResult(n, l, energy, int(nodes), bool(converged), float(residual), hi - lo)


@dataclass(frozen=True)
class ValidationResult:
    n: int
    l: int
    E_closed: float
    E_oracle_approx: float
    E_oracle_exact: float
    approx: OracleResult
    exact: OracleResult

    @property
    def closed_vs_approx(self):
        return abs(self.E_closed - self.E_oracle_approx)

    @property
    def closed_vs_exact(self):
        return abs(self.E_closed - self.E_oracle_exact)


def validate(m, n, l, points=DEFAULT_POINTS, tol=1e-6, require_physical=True):
    """Closed-form level vs. Numerov on the approximated and exact Hamiltonians."""
    entry = energy_level(m, n, l)
    if require_physical and not entry.physical:
        raise DomainError(f"level n={n}, l={l} of {m.name} is not physical")
    results = {}
    for kind in ("approx", "exact"):
        grid = default_grid(m, l, kind, points)
        results[kind] = solve_radial(effective_potential(m, l, kind), m.lam, n, grid, tol, l)
    return ValidationResult(n, l, entry.energy, results["approx"].energy,
                            results["exact"].energy, results["approx"], results["exact"])
