"""Optimal shift and the sharp axial bound G_p(r).

For p in (1, inf) the bound is G_p(r) = Phi(a*) where a* = a*(r) is the
unique root of the stationarity function F(r, .) inside the kernel's value
range.  The root is found by damped Newton iteration safeguarded by
bisection against a maintained sign bracket.  The endpoint exponents have
closed forms:

  p = 1:    a* is the midpoint of the kernel range, G_1 its half-width;
  p = 2:    a* = 1 and G_2^2 = (1-r^2)^(2n-2) 2F1(2n-2, (3n-2)/2; n/2; r^2) - 1;
  p = inf:  a* = ((1-r^2)/(1+r^2))^(n-1) and G_inf(r) is the harmonic measure
            split along the equator, an explicit hypergeometric expression
            with elementary forms in dimensions 3, 4, 5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BracketError, DomainError, NonConvergenceError
from .kernel import BallContext, check_radius, kernel_range
from .objective import ObjectiveParams, big_f, dF_da, dF_dr, phi
from .quadrature import DEFAULT_ORDER
from .special import alpha_q, hyp2f1, log_gamma

#: Absolute stationarity residual accepted as a root.
F_TOL = 1e-9
#: Relative fallback residual (vs the same integral without cancellation)
#: accepted once the bracket is exhausted; covers huge-kernel regimes where
#: the absolute target is below double-precision quadrature noise.
F_TOL_REL = 1e-12
_MAX_NEWTON = 200
_BRACKET_MARGIN = 1e-12

_METHODS = ("numeric", "closed_p1", "closed_p2", "closed_pinf")


@dataclass(frozen=True)
class GpResult:
    """One evaluated point of the sharp bound."""

    ctx: BallContext
    r: float
    a_star: float
    g_value: float
    method: str
    est_error: float

    def __post_init__(self) -> None:
        if self.method not in _METHODS:
            raise DomainError(f"unknown method tag {self.method!r}")
        if not self.a_star > 0.0:
            raise DomainError(f"optimal shift must be positive, got {self.a_star!r}")
        if self.g_value < 0.0 or self.est_error < 0.0:
            raise DomainError("bound value and error estimate must be nonnegative")


def solve_a_star(ctx: BallContext, r: float, order: int = DEFAULT_ORDER) -> float:
    """Root of F(r, .) in the open kernel range; a*(0) = 1 exactly."""
    if not (math.isfinite(ctx.q) and ctx.q > 1.0):
        raise DomainError("shift optimization applies to p in (1, inf) only")
    r = check_radius(r)
    if r == 0.0:
        return 1.0
    return _solve_cached(ctx, r, order)


@lru_cache(maxsize=4096)
def _solve_cached(ctx: BallContext, r: float, order: int) -> float:
    params = ObjectiveParams(ctx, r, order)
    kmin, kmax = kernel_range(ctx, r)
    margin = _BRACKET_MARGIN * (kmax - kmin)
    lo, hi = kmin + margin, kmax - margin
    f_lo, f_hi = big_f(params, lo), big_f(params, hi)
    if not (f_lo > 0.0 > f_hi):
        raise BracketError(
            f"no sign change across the kernel range at r={r}: F({lo})={f_lo}, F({hi})={f_hi}"
        )
    a = 1.0 if lo < 1.0 < hi else 0.5 * (lo + hi)
    fa = big_f(params, a)
    for _ in range(_MAX_NEWTON):
        if fa > 0.0:
            lo = max(lo, a)
        elif fa < 0.0:
            hi = min(hi, a)
        else:
            return a
        if abs(fa) <= F_TOL:
            return a
        if hi - lo <= 2.0 ** -50 * max(1.0, hi):
            break
        slope = dF_da(params, a)
        candidate = a - fa / slope if slope < 0.0 else math.nan
        if not lo < candidate < hi:
            candidate = 0.5 * (lo + hi)
        f_candidate = big_f(params, candidate)
        if abs(f_candidate) >= abs(fa):
            midpoint = 0.5 * (lo + hi)
            if candidate != midpoint:
                candidate = midpoint
                f_candidate = big_f(params, candidate)
        a, fa = candidate, f_candidate
    # Bracket exhausted (or iteration cap).  Accept only quadrature-noise
    # residuals, measured against the same integral without sign cancellation.
    scale = _deviation_scale(params, a)
    if abs(fa) <= max(F_TOL, F_TOL_REL * scale):
        return a
    raise NonConvergenceError(
        f"stationarity residual {fa} above tolerance at r={r}, q={ctx.q}"
    )


def _deviation_scale(params: ObjectiveParams, a: float) -> float:
    q = params.ctx.q
    return phi(params, a) ** (q - 1.0)


def g_1_closed(n: int, r: float) -> tuple[float, float]:
    """Chebyshev-center solution for p = 1: best sup-distance to a constant.

    a* = (max + min)/2 and G_1 = (max - min)/2 over the kernel range; the
    pair satisfies a*^2 - G_1^2 = 1 because the range endpoints multiply to 1.
    """
    ctx = BallContext(n, 1.0)
    kmin, kmax = kernel_range(ctx, r)
    return 0.5 * (kmax + kmin), 0.5 * (kmax - kmin)


def g_2_closed(n: int, r: float) -> float:
    """Explicit G_2(r) = sqrt((1-r^2)^(2n-2) 2F1(2n-2, (3n-2)/2; n/2; r^2) - 1)."""
    check_radius(r)
    if not (isinstance(n, int) and n >= 3):
        raise DomainError(f"dimension must be an integer >= 3, got {n!r}")
    if r == 0.0:
        return 0.0
    second_moment = (1.0 - r * r) ** (2 * n - 2) * hyp2f1(
        2.0 * n - 2.0, (3.0 * n - 2.0) / 2.0, n / 2.0, r * r, (1.0 - r) * (1.0 + r)
    )
    return math.sqrt(second_moment - 1.0)


def g_inf_closed(n: int, r: float) -> tuple[float, float]:
    """(a*, G_inf(r)) for p = inf.

    a* = ((1-r^2)/(1+r^2))^(n-1) is the kernel value on the equator, and

      G_inf(r) = 2^n r (1-r^2)^(n-1) Gamma(n/2)^2
                 / (pi (1+r^2)^n Gamma(n-1)) * 2F1(1, n/2; 3/2; w),
      w = (2r/(1+r^2))^2.

    The hypergeometric factor is evaluated through the Euler transform for
    w > 1/2, which converges for every w < 1 (and terminates for odd n), so
    the formula remains usable arbitrarily close to the boundary.
    """
    check_radius(r)
    if not (isinstance(n, int) and n >= 3):
        raise DomainError(f"dimension must be an integer >= 3, got {n!r}")
    a_star = ((1.0 - r * r) / (1.0 + r * r)) ** (n - 1)
    if r == 0.0:
        return a_star, 0.0
    w = (2.0 * r / (1.0 + r * r)) ** 2
    # 1 - w = ((1-r^2)/(1+r^2))^2 exactly; the direct subtraction loses
    # half the mantissa once r is close to 1.
    one_minus_w = ((1.0 - r * r) / (1.0 + r * r)) ** 2
    log_pref = (
        n * math.log(2.0)
        + math.log(r)
        + (n - 1) * math.log1p(-r * r)
        + 2.0 * log_gamma(n / 2.0)
        - math.log(math.pi)
        - n * math.log1p(r * r)
        - log_gamma(n - 1.0)
    )
    return a_star, math.exp(log_pref) * hyp2f1(1.0, n / 2.0, 1.5, w, one_minus_w)


def uh_elementary(n: int, r: float) -> float:
    """Elementary forms of G_inf in dimensions 3, 4, 5 (cross-check targets)."""
    check_radius(r)
    rr = r * r
    if n == 3:
        return 2.0 * r / (1.0 + rr)
    if n == 4:
        return 4.0 * r * (1.0 - rr) / (math.pi * (1.0 + rr) ** 2) + (4.0 / math.pi) * math.atan(r)
    if n == 5:
        return (3.0 * r + 2.0 * r * rr + 3.0 * rr * rr * r) / (1.0 + rr) ** 3
    raise DomainError(f"elementary form available for n in {{3, 4, 5}}, got {n!r}")


def g_p(ctx: BallContext, r: float, order: int = DEFAULT_ORDER) -> GpResult:
    """The sharp bound G_p(r) with the optimal shift and an error estimate.

    Dispatch: p = 1 and p = inf return their closed forms (est_error 0);
    every finite p > 1 is solved numerically, with est_error from doubling
    the rule order (p = 2 instead reports the deviation from its closed form).
    """
    r = check_radius(r)
    if ctx.p == 1.0:
        a_star, g_val = g_1_closed(ctx.n, r)
        return GpResult(ctx, r, a_star, g_val, "closed_p1", 0.0)
    if ctx.p == math.inf:
        a_star, g_val = g_inf_closed(ctx.n, r)
        return GpResult(ctx, r, a_star, g_val, "closed_pinf", 0.0)
    return _g_p_numeric(ctx, r, order)


@lru_cache(maxsize=4096)
def _g_p_numeric(ctx: BallContext, r: float, order: int) -> GpResult:
    a_star = solve_a_star(ctx, r, order)
    if r == 0.0:
        return GpResult(ctx, r, a_star, 0.0, "numeric", 0.0)
    g_val = float(phi(ObjectiveParams(ctx, r, order), a_star))
    if ctx.p == 2.0:
        est = abs(g_val - g_2_closed(ctx.n, r))
    else:
        # Phi is stationary at a*, so re-solving at the doubled order is not
        # needed to estimate the quadrature error of the bound itself.
        est = abs(g_val - float(phi(ObjectiveParams(ctx, r, 2 * order), a_star)))
    return GpResult(ctx, r, a_star, g_val, "numeric", est)


def grad_constant(ctx: BallContext) -> float:
    """Sharp gradient-at-origin constant 2(n-1) alpha_q^(1/q).

    The p = 1 endpoint is the q -> inf limit, where alpha_q^(1/q) -> 1.
    """
    n = ctx.n
    if ctx.p == 1.0:
        return 2.0 * (n - 1.0)
    return 2.0 * (n - 1.0) * alpha_q(n, ctx.q) ** (1.0 / ctx.q)


def gp_derivative_at_zero(ctx: BallContext, h: float = 1e-4, order: int = DEFAULT_ORDER) -> float:
    """Forward difference G_p(h)/h, the slope of the bound at r = 0.

    Converges to grad_constant(ctx) as h -> 0; h is capped at 0.01 so the
    secant stays in the linear regime.
    """
    if not 0.0 < h <= 0.01:
        raise DomainError(f"step must lie in (0, 0.01], got {h!r}")
    return g_p(ctx, h, order).g_value / h


def da_star_dr(ctx: BallContext, r: float, order: int = DEFAULT_ORDER) -> float:
    """Implicit-function derivative of the optimal shift: -dF/dr / dF/da."""
    r = check_radius(r)
    if r == 0.0:
        raise DomainError("shift derivative is computed for r in (0, 1)")
    a_star = solve_a_star(ctx, r, order)
    params = ObjectiveParams(ctx, r, order)
    return -dF_dr(params, a_star) / dF_da(params, a_star)
