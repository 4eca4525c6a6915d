"""The shifted-kernel objective and its stationarity function.

For a fixed dimension, radius r and conjugate exponent q in (1, inf), the
quantity minimized over the shift a is

    Phi(a) = ( integral |K(r, .) - a|^q dsigma )^(1/q),

which is strictly convex in a.  Its stationarity is governed by

    F(r, a) = integral (K - a) |K - a|^(q-2) dsigma,

strictly decreasing in a, with d(Phi)/da = -Phi^(1-q) * F.  Every integrand
here is smooth except where K crosses the level a, so all integrals route
through the breakpoint-aware rule with that crossing declared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .kernel import BallContext, check_radius, crossing_point, d_kernel_dr, poisson_szego_axis
from .quadrature import DEFAULT_ORDER, integrate_with_breakpoint

# Floor applied to |K - a| in negative-exponent integrands: a quadrature node
# can land within one rounding step of the crossing, where the computed
# difference may be exactly 0 although the true distance never is.
_DEV_FLOOR = 2.0 ** -52


@dataclass(frozen=True)
class ObjectiveParams:
    """Evaluation site for the objective: context, radius, rule order."""

    ctx: BallContext
    r: float
    order: int = DEFAULT_ORDER

    def __post_init__(self) -> None:
        if not (math.isfinite(self.ctx.q) and self.ctx.q > 1.0):
            raise DomainError(
                f"objective needs a finite conjugate exponent q > 1, got q = {self.ctx.q!r}"
            )
        check_radius(self.r)
        if self.order < 2:
            raise DomainError(f"rule order must be >= 2, got {self.order!r}")


def _deviation_integral(params: ObjectiveParams, a: float, weight_fn) -> float:
    """Breakpoint-routed integral of weight_fn(K - a, t)."""
    ctx, r = params.ctx, params.r
    t0 = crossing_point(ctx, r, a)

    def integrand(t):
        return weight_fn(poisson_szego_axis(ctx, r, t) - a, t)

    return integrate_with_breakpoint(ctx.n, params.order, integrand, t0)


def phi(params: ObjectiveParams, a: float) -> float:
    """Phi(a) = (integral |K - a|^q dsigma)^(1/q); at r = 0 this is |1 - a|."""
    if not math.isfinite(a):
        raise DomainError(f"shift must be finite, got {a!r}")
    q = params.ctx.q
    if params.r == 0.0:
        return abs(1.0 - a)
    value = _deviation_integral(params, a, lambda dev, t: np.abs(dev) ** q)
    return value ** (1.0 / q)


def big_f(params: ObjectiveParams, a: float) -> float:
    """F(r, a) = integral (K - a)|K - a|^(q-2) dsigma, decreasing in a.

    The integrand is written sign(K - a) |K - a|^(q-1), which is bounded for
    every q > 1.
    """
    if not math.isfinite(a):
        raise DomainError(f"shift must be finite, got {a!r}")
    q = params.ctx.q
    if params.r == 0.0:
        return math.copysign(abs(1.0 - a) ** (q - 1.0), 1.0 - a)
    return _deviation_integral(
        params, a, lambda dev, t: np.sign(dev) * np.abs(dev) ** (q - 1.0)
    )


def dF_da(params: ObjectiveParams, a: float) -> float:
    """dF/da = (1 - q) * integral |K - a|^(q-2) dsigma  (always negative).

    For q < 2 the integrand has an integrable singularity at the crossing;
    the graded rule absorbs it.
    """
    if not math.isfinite(a):
        raise DomainError(f"shift must be finite, got {a!r}")
    q = params.ctx.q
    if params.r == 0.0:
        if a == 1.0:
            if q >= 2.0:
                return -1.0 if q == 2.0 else 0.0
            raise DomainError("dF/da diverges at r = 0, a = 1 for q < 2")
        return (1.0 - q) * abs(1.0 - a) ** (q - 2.0)
    if q < 2.0:
        floor = _DEV_FLOOR * max(1.0, abs(a))

        def weight(dev, t):
            return np.maximum(np.abs(dev), floor) ** (q - 2.0)

    else:

        def weight(dev, t):
            return np.abs(dev) ** (q - 2.0)

    return (1.0 - q) * _deviation_integral(params, a, weight)


def dF_dr(params: ObjectiveParams, a: float) -> float:
    """dF/dr = (q - 1) * integral dK/dr * |K - a|^(q-2) dsigma for r > 0."""
    if not math.isfinite(a):
        raise DomainError(f"shift must be finite, got {a!r}")
    ctx, r = params.ctx, params.r
    q = ctx.q
    if r == 0.0:
        raise DomainError("dF/dr is defined for r in (0, 1); use a small positive r")
    floor = _DEV_FLOOR * max(1.0, abs(a)) if q < 2.0 else 0.0
    t0 = crossing_point(ctx, r, a)

    def integrand(t):
        dev = poisson_szego_axis(ctx, r, t) - a
        mag = np.maximum(np.abs(dev), floor) if floor else np.abs(dev)
        return d_kernel_dr(ctx, r, t) * mag ** (q - 2.0)

    return (q - 1.0) * integrate_with_breakpoint(ctx.n, params.order, integrand, t0)
