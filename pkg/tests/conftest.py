"""Shared oracles for the test suite.

The reference values here are computed by methods independent of the
package's own quadrature: a plain midpoint rule in the polar angle, and
mpmath's adaptive tanh-sinh integration at elevated precision with interval
splits computed in that same precision.
"""

import math

import numpy as np


def zonal_weight_constant(n):
    return math.exp(math.lgamma(n / 2.0) - math.lgamma((n - 1) / 2.0)) / math.sqrt(math.pi)


def brute_zonal_midpoint(n, f, points=2_000_001):
    """Uniform midpoint rule in theta for the zonal surface integral."""
    theta = (np.arange(points) + 0.5) * (math.pi / points)
    vals = np.asarray(f(np.cos(theta)), dtype=float)
    h = math.pi / points
    return zonal_weight_constant(n) * h * float(np.sum(vals * np.sin(theta) ** (n - 2)))


def mp_zonal(n, f_mp, split=(), dps=30):
    """High-precision zonal integral; ``split`` lists interior break values
    of t (as exact mpf expressions or floats promoted exactly)."""
    from mpmath import mp

    old = mp.dps
    mp.dps = dps
    try:
        c_n = mp.gamma(mp.mpf(n) / 2) / (mp.sqrt(mp.pi) * mp.gamma((mp.mpf(n) - 1) / 2))
        expo = (mp.mpf(n) - 3) / 2
        points = [mp.mpf(-1)] + [mp.mpf(s) for s in split] + [mp.mpf(1)]
        total = mp.mpf(0)
        for lo, hi in zip(points, points[1:]):
            total += mp.quad(lambda t: f_mp(t) * (1 - t * t) ** expo, [lo, hi])
        return float(c_n * total)
    finally:
        mp.dps = old


def mp_kernel(n, r, t):
    """Kernel value in mpmath arithmetic; r is promoted exactly from float."""
    from mpmath import mp

    rr = mp.mpf(r)
    return ((1 - rr * rr) / (1 + rr * rr - 2 * rr * t)) ** (n - 1)


def mp_crossing(n, r, a):
    """Crossing point of the kernel with level a, in mpmath precision.

    Both r and a are float64 inputs promoted exactly, so this is the true
    crossing of the function the double-precision code integrates.
    """
    from mpmath import mp

    rr = mp.mpf(r)
    aa = mp.mpf(a)
    return (1 + rr * rr) / (2 * rr) - (1 - rr * rr) / (2 * rr) * aa ** (mp.mpf(1) / (1 - n))


def central_diff(fn, x, h):
    return (fn(x + h) - fn(x - h)) / (2.0 * h)
