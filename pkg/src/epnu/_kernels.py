"""Numerov inner loops.  Compiled with numba unless EPNU_DISABLE_NUMBA is set."""
import numpy as np

from ._accel import njit

_RESCALE = 1e100


@njit
def numerov_node_count(v, h, energy, lam):
    """Sign changes of the outward solution of u'' = (v - E)/lam * u.

    Starts from u(r0) = 0 and counts nodes on (r0, r_end].  For a Dirichlet
    condition at r_end this equals the number of eigenvalues below ``energy``.
    """
    n = v.shape[0]
    c = h * h / 12.0
    u_prev = 0.0
    u = 1e-30
    w_prev = (1.0 - c * (v[0] - energy) / lam) * u_prev
    w = (1.0 - c * (v[1] - energy) / lam) * u
    nodes = 0
    for i in range(1, n - 1):
        g = (v[i] - energy) / lam
        w_next = 2.0 * w - w_prev + 12.0 * c * g * u
        u_next = w_next / (1.0 - c * (v[i + 1] - energy) / lam)
        if u_next == 0.0 or (u_next < 0.0) != (u < 0.0):
            nodes += 1
        w_prev = w
        w = w_next
        u = u_next
        if abs(u) > _RESCALE:
            w_prev /= _RESCALE
            w /= _RESCALE
            u /= _RESCALE
    return nodes


@njit
def numerov_sweep(v, h, energy, lam, start, stop, step):
    """Integrate from index ``start`` towards ``stop`` (exclusive) with u=0 at start.

    Returns the solution on the full grid (zeros outside the swept range),
    rescaled on the fly to avoid overflow.
    """
    n = v.shape[0]
    u = np.zeros(n)
    c = h * h / 12.0
    u[start + step] = 1e-30
    f0 = 1.0 - c * (v[start] - energy) / lam
    f1 = 1.0 - c * (v[start + step] - energy) / lam
    w_prev = f0 * u[start]
    w = f1 * u[start + step]
    i = start + step
    while i + step != stop:
        g = (v[i] - energy) / lam
        w_next = 2.0 * w - w_prev + 12.0 * c * g * u[i]
        j = i + step
        u[j] = w_next / (1.0 - c * (v[j] - energy) / lam)
        w_prev = w
        w = w_next
        i = j
        if abs(u[i]) > _RESCALE:
            k = start
            while k != i + step:
                u[k] /= _RESCALE
                k += step
            w_prev /= _RESCALE
            w /= _RESCALE
    return u
