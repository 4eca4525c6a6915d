"""Quadrature over the unit sphere for integrands that depend only on the
axis coordinate t = <eta, axis>.

The surface integral of such a zonal integrand reduces to one dimension:

    integral f(<eta, axis>) dsigma = c_n * integral_{-1}^{1} f(t) (1-t^2)^((n-3)/2) dt,
    c_n = Gamma(n/2) / (sqrt(pi) * Gamma((n-1)/2)),

so the natural rule is Gauss-Jacobi with both exponents (n-3)/2, weights
scaled by c_n (they then sum to 1, the measure of the sphere).

Two integration paths are provided.  ``integrate_zonal`` applies the plain
rule and is spectrally accurate for smooth f.  ``integrate_with_breakpoint``
handles integrands with a kink or an integrable power singularity at a known
interior point t0: it substitutes t = cos(theta), which keeps the Jacobi
weight analytic at the poles, and tiles each side of theta0 = arccos(t0)
with panels shrinking geometrically toward the breakpoint (ratio 1/2, at
least 12 panels per side).  The leftover geometric tail is summed by
extrapolating the measured panel-sum ratio, which resolves any integrable
power behaviour without knowing its exponent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import CapUnderflowError, DomainError
from .special import log_gamma

#: Default node count for the plain zonal rule.
DEFAULT_ORDER = 128

# Panel layout for the breakpoint path.
_PANEL_RATIO = 0.5
_MIN_PANELS = 12
_CLOSING_REL = 1e-8  # innermost panel edge, relative to the side length
_TAIL_GUARD = 0.95   # largest admissible panel-sum ratio for tail summation


def _zonal_constant(n: int) -> float:
    return math.exp(log_gamma(n / 2.0) - log_gamma((n - 1) / 2.0)) / math.sqrt(math.pi)


def _jacobi_eval(order: int, alpha: float, beta: float, x: np.ndarray):
    """Values of P_order, P_{order-1} and P_order' at x, via the three-term
    recurrence in the standard normalization."""
    ab = alpha + beta
    p_prev = np.ones_like(x)
    p = 0.5 * ((alpha - beta) + (2.0 + ab) * x)
    for j in range(2, order + 1):
        two_j_ab = 2.0 * j + ab
        a_j = 2.0 * j * (j + ab) * (two_j_ab - 2.0)
        b_j = (two_j_ab - 1.0) * (alpha * alpha - beta * beta + two_j_ab * (two_j_ab - 2.0) * x)
        c_j = 2.0 * (j - 1.0 + alpha) * (j - 1.0 + beta) * two_j_ab
        p, p_prev = (b_j * p - c_j * p_prev) / a_j, p
    top = 2.0 * order + ab
    deriv = (order * (alpha - beta - top * x) * p + 2.0 * (order + alpha) * (order + beta) * p_prev) / (
        top * (1.0 - x * x)
    )
    return p, p_prev, deriv


@lru_cache(maxsize=64)
def _gauss_jacobi(order: int, alpha: float, beta: float):
    """Nodes and weights of the ``order``-point Gauss-Jacobi rule for the
    weight (1-x)^alpha (1+x)^beta on [-1, 1].

    Node seeds come from the symmetric tridiagonal (Golub-Welsch) matrix of
    the recurrence; each seed is then polished by Newton iteration on the
    Jacobi recurrence itself, and the weights follow from the derivative
    identity, so the rule is pinned to the recurrence rather than to the
    eigensolver's rounding.
    """
    if order < 2:
        raise DomainError(f"rule order must be >= 2, got {order!r}")
    ab = alpha + beta
    k = np.arange(order, dtype=float)
    diag = np.empty(order)
    diag[0] = (beta - alpha) / (ab + 2.0)
    kk = k[1:]
    diag[1:] = (beta * beta - alpha * alpha) / ((2.0 * kk + ab) * (2.0 * kk + ab + 2.0))
    ke = k[1:]
    off = np.sqrt(
        4.0 * ke * (ke + alpha) * (ke + beta) * (ke + ab)
        / ((2.0 * ke + ab) ** 2 * ((2.0 * ke + ab) ** 2 - 1.0))
    )
    x = eigh_tridiagonal(diag, off, eigvals_only=True)
    for _ in range(3):
        value, _, deriv = _jacobi_eval(order, alpha, beta, x)
        step = value / deriv
        x = x - step
    value, prev, deriv = _jacobi_eval(order, alpha, beta, x)
    if not (np.all(np.diff(x) > 0.0) and x[0] > -1.0 and x[-1] < 1.0):
        raise DomainError(f"Gauss-Jacobi nodes degenerated at order {order}")
    log_c = (
        log_gamma(alpha + order)
        + log_gamma(beta + order)
        - log_gamma(order + 1.0)
        - log_gamma(order + ab + 1.0)
    )
    w = math.exp(log_c) * (2.0 * order + ab) * 2.0 ** ab / (deriv * prev)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@dataclass(frozen=True)
class ZonalQuadrature:
    """A ready-to-apply zonal rule: sum(weights * f(nodes)) integrates f
    against normalized surface measure."""

    n: int
    order: int
    nodes: np.ndarray
    weights: np.ndarray


@lru_cache(maxsize=64)
def build_rule(n: int, order: int = DEFAULT_ORDER) -> ZonalQuadrature:
    """Gauss-Jacobi zonal rule for dimension n with ``order`` nodes.

    Weights include the c_n normalization and therefore sum to 1 up to
    rounding; the rule is exact for polynomials of degree <= 2*order - 1.
    """
    if not (isinstance(n, int) and n >= 3):
        raise DomainError(f"dimension must be an integer >= 3, got {n!r}")
    expo = (n - 3) / 2.0
    x, w = _gauss_jacobi(order, expo, expo)
    weights = _zonal_constant(n) * w
    weights.setflags(write=False)
    return ZonalQuadrature(n=n, order=order, nodes=x, weights=weights)


def _eval_integrand(f, x: np.ndarray) -> np.ndarray:
    vals = np.asarray(f(x), dtype=float)
    if vals.ndim == 0:
        vals = np.broadcast_to(vals, x.shape)
    elif vals.shape != x.shape:
        vals = np.fromiter((float(f(float(v))) for v in x.ravel()), dtype=float, count=x.size)
        vals = vals.reshape(x.shape)
    if not np.isfinite(vals).all():
        raise DomainError("integrand produced non-finite values")
    return vals


def integrate_zonal(rule: ZonalQuadrature, f) -> float:
    """Apply the plain rule: sum of weights * f(nodes)."""
    return float(np.dot(rule.weights, _eval_integrand(f, rule.nodes)))


@lru_cache(maxsize=16)
def _panel_nodes(k: int):
    x, w = np.polynomial.legendre.leggauss(k)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def integrate_with_breakpoint(n: int, order: int, f, t0) -> float:
    """Zonal integral of f with special handling at the axis value t0.

    ``t0 = None`` falls back to the plain rule.  Otherwise the integral is
    computed in theta = arccos(t) with geometrically graded panels on both
    sides of the breakpoint and a ratio-extrapolated tail, which keeps full
    accuracy for |t - t0|^s factors with s > -1 (kinks and integrable
    singularities alike).
    """
    if t0 is None:
        return integrate_zonal(build_rule(n, order), f)
    if not -1.0 <= t0 <= 1.0:
        raise DomainError(f"breakpoint must lie in [-1, 1], got {t0!r}")
    theta0 = math.acos(t0)
    k = max(12, order // 8)
    xi, om = _panel_nodes(k)
    panels = max(_MIN_PANELS, int(math.ceil(math.log(1.0 / _CLOSING_REL) / math.log(1.0 / _PANEL_RATIO))))
    total = 0.0
    for lo, hi in ((0.0, theta0), (theta0, math.pi)):
        length = hi - lo
        if length <= 1e-300:
            continue  # breakpoint sits at a pole of the sphere
        offsets = length * _PANEL_RATIO ** np.arange(panels + 1)
        if hi == theta0:  # panels shrink toward the right edge
            left, right = hi - offsets[:-1], hi - offsets[1:]
        else:             # panels shrink toward the left edge
            left, right = lo + offsets[1:], lo + offsets[:-1]
        mid = 0.5 * (left + right)
        half = 0.5 * (right - left)
        theta = mid[:, None] + half[:, None] * xi
        wt = half[:, None] * om
        vals = _eval_integrand(f, np.cos(theta)) * np.sin(theta) ** (n - 2)
        per_panel = np.sum(wt * vals, axis=1)  # index grows toward the breakpoint
        side = float(np.sum(per_panel))
        # Sum the uncovered geometric tail from the measured decay ratio.
        if per_panel[-2] != 0.0:
            ratio = per_panel[-1] / per_panel[-2]
            if 0.0 < ratio < _TAIL_GUARD:
                side += per_panel[-1] * ratio / (1.0 - ratio)
        total += side
    return _zonal_constant(n) * total


def cap_rule(n: int, t_lower: float, order: int = 64):
    """Nodes and sigma-weights for the polar cap {t >= t_lower}.

    Returns (nodes, weights) with sum(weights * f(nodes)) the integral of a
    zonal f over the cap against normalized surface measure; in particular
    the weight total is the cap's measure.  The (1-t) factor of the zonal
    weight is kept as an exact Jacobi weight on the mapped interval, so the
    rule stays accurate for caps many orders of magnitude smaller than 1.
    """
    if not (isinstance(n, int) and n >= 3):
        raise DomainError(f"dimension must be an integer >= 3, got {n!r}")
    if not -1.0 < t_lower < 1.0:
        raise CapUnderflowError(f"cap boundary {t_lower!r} leaves no representable cap")
    expo = (n - 3) / 2.0
    u, wu = _gauss_jacobi(order, expo, 0.0)
    h = 0.5 * (1.0 - t_lower)
    t = t_lower + h * (u + 1.0)
    scale = _zonal_constant(n) * h ** (expo + 1.0)
    weights = scale * wu * (1.0 + t) ** expo
    if not np.all(weights > 0.0):
        raise CapUnderflowError(f"cap at t >= {t_lower!r} underflowed in double precision")
    return t, weights
