"""Jacobi polynomials and terminating hypergeometric sums."""
import math

import numpy as np

from .errors import DomainError, UnsupportedCaseError


def jacobi(n, a, b, x):
    """P_n^(a,b)(x) by the three-term recurrence; vectorized over ``x``."""
    if n < 0:
        raise DomainError("degree must be non-negative")
    if a <= -1 or b <= -1:
        raise DomainError(f"Jacobi parameters must exceed -1, got a={a!r}, b={b!r}")
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if x.ndim else float(p_prev)
    p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x
    for k in range(2, n + 1):
        s = 2 * k + a + b
        c1 = 2.0 * k * (k + a + b) * (s - 2.0)
        c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b)
        c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s
        p_prev, p = p, (c2 * p - c3 * p_prev) / c1
    return p if x.ndim else float(p)


def _terminating_index(params):
    """Smallest k with (a)_k == 0 over the numerator parameters, else None."""
    stops = [int(-a) for a in params if a <= 0 and float(a).is_integer()]
    return min(stops) if stops else None


def hyp2f1_poly(a, b, c, z):
    """Terminating 2F1(a, b; c; z) for a non-positive integer ``a`` or ``b``."""
    top = _terminating_index((a, b))
    if top is None:
        raise UnsupportedCaseError("2F1 is only evaluated when it terminates")
    z = np.asarray(z, dtype=float)
    term = np.ones_like(z)
    total = np.ones_like(z)
    for k in range(top):
        if c + k == 0:
            raise UnsupportedCaseError("denominator parameter hits zero before termination")
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total = total + term
    return total if z.ndim else float(total)


def hyp3f2_unit(a1, a2, a3, b1, b2):
    """Terminating 3F2(a1, a2, a3; b1, b2; 1)."""
    top = _terminating_index((a1, a2, a3))
    if top is None:
        raise UnsupportedCaseError("3F2 at unit argument is only evaluated when it terminates")
    terms = [1.0]
    t = 1.0
    for k in range(top):
        den = (b1 + k) * (b2 + k)
        if den == 0:
            raise UnsupportedCaseError("denominator parameter hits zero before termination")
        t *= (a1 + k) * (a2 + k) * (a3 + k) / (den * (k + 1))
        terms.append(t)
    return math.fsum(terms)


def pochhammer(a, k):
    """Rising factorial (a)_k for integer k >= 0."""
    out = 1.0
    for j in range(k):
        out *= a + j
    return out
