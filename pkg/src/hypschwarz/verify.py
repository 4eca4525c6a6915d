"""Certification helpers: extremal boundary data, random bound sampling,
the p = 1 minimizing sequence, and the L2 gradient-corollary comparison.

Everything works with zonal boundary functions, i.e. functions of the axis
coordinate t alone; their harmonic extensions at axis points and the
gradient at the origin then reduce to one-dimensional integrals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError
from .kernel import BallContext, check_radius, crossing_point, poisson_szego_axis
from .quadrature import DEFAULT_ORDER, build_rule, cap_rule, integrate_with_breakpoint
from .solver import g_1_closed, g_inf_closed, g_p, grad_constant, solve_a_star

#: Multiplicative slack allowed when checking strict inequalities in floats.
BOUND_SLACK = 1e-7

_SUP_GRID_SIZE = 8193


@dataclass
class ZonalBoundaryFunction:
    """Boundary data g(t) with its context, cached mean and p-norm.

    ``kink`` declares a known non-smooth point of g so integrals involving
    it can route through the breakpoint-aware rule.
    """

    g: Callable
    ctx: BallContext
    kink: Optional[float] = None
    order: int = DEFAULT_ORDER
    mean: float = field(init=False)
    norm: float = field(init=False)

    def __post_init__(self) -> None:
        self.mean = integrate_with_breakpoint(self.ctx.n, self.order, self.g, self.kink)
        self.norm = self._p_norm()

    def _p_norm(self) -> float:
        p = self.ctx.p
        if p == math.inf:
            grid = np.cos(np.linspace(0.0, math.pi, _SUP_GRID_SIZE))
            return float(np.max(np.abs(np.asarray(self.g(grid), dtype=float))))
        value = integrate_with_breakpoint(
            self.ctx.n, self.order, lambda t: np.abs(self.g(t)) ** p, self.kink
        )
        return value ** (1.0 / p)

    def centered(self) -> "ZonalBoundaryFunction":
        shift = self.mean
        base = self.g
        return ZonalBoundaryFunction(
            g=lambda t: base(t) - shift, ctx=self.ctx, kink=self.kink, order=self.order
        )


def poisson_integral_axis(phi: ZonalBoundaryFunction, r: float) -> float:
    """Harmonic extension of phi evaluated at radius r on the axis."""
    r = check_radius(r)
    ctx = phi.ctx
    return integrate_with_breakpoint(
        ctx.n,
        phi.order,
        lambda t: poisson_szego_axis(ctx, r, t) * phi.g(t),
        phi.kink,
    )


def extremal_phi(ctx: BallContext, r: float, order: int = DEFAULT_ORDER) -> ZonalBoundaryFunction:
    """Boundary data attaining G_p(r): sign(K - a*) |K - a*|^(q-1).

    The exponent q/p equals q - 1, covering p = inf (where the data is the
    bare sign of K - a*).  No extremal exists for p = 1; use
    :func:`minimizing_sequence_p1` there.
    """
    r = check_radius(r)
    if ctx.p == 1.0:
        raise DomainError("p = 1 admits no extremal; use minimizing_sequence_p1")
    if r == 0.0:
        raise DomainError("the bound degenerates at r = 0; extremal data needs r > 0")
    if ctx.p == math.inf:
        a_star = g_inf_closed(ctx.n, r)[0]
    else:
        a_star = solve_a_star(ctx, r, order)
    expo = ctx.q - 1.0
    t0 = crossing_point(ctx, r, a_star)

    def data(t):
        dev = poisson_szego_axis(ctx, r, t) - a_star
        return np.sign(dev) * np.abs(dev) ** expo

    return ZonalBoundaryFunction(g=data, ctx=ctx, kink=t0, order=order)


def moment_extremal(ctx: BallContext, order: int = DEFAULT_ORDER) -> ZonalBoundaryFunction:
    """Boundary data attaining the gradient constant: |t|^(q-1) sign(t)."""
    if ctx.p == 1.0:
        raise DomainError("the p = 1 gradient constant is a limit, not attained")
    expo = ctx.q - 1.0

    def data(t):
        t = np.asarray(t, dtype=float)
        return np.sign(t) * np.abs(t) ** expo

    return ZonalBoundaryFunction(g=data, ctx=ctx, kink=0.0, order=order)


@dataclass(frozen=True)
class SharpnessReport:
    """Attained value vs claimed bound for one (ctx, r)."""

    ctx: BallContext
    r: float
    g_bound: float
    attained: float
    u_at_zero: float
    rel_gap: float


def verify_sharpness(ctx: BallContext, r: float, order: int = DEFAULT_ORDER) -> SharpnessReport:
    """Construct the extremal data and compare u(r axis) with G_p * ||phi||_p.

    For p in (1, inf] the relative gap is pure quadrature error.  For p = 1
    the comparison uses the cap-pair minimizing sequence at index 64, whose
    gap is the genuine (slow) convergence deficit of that sequence.
    """
    r = check_radius(r)
    if r == 0.0:
        raise DomainError("sharpness is certified for r in (0, 1)")
    if ctx.p == 1.0:
        bound = g_1_closed(ctx.n, r)[1]
        attained = minimizing_sequence_p1(ctx.n, r, 64)
        return SharpnessReport(ctx, r, bound, attained, 0.0, abs(bound - attained) / bound)
    phi_star = extremal_phi(ctx, r, order)
    attained = poisson_integral_axis(phi_star, r)
    bound = g_p(ctx, r, order).g_value * phi_star.norm
    gap = abs(bound - attained) / max(bound, 2.0 ** -1022)
    return SharpnessReport(ctx, r, bound, attained, phi_star.mean, gap)


def grad_at_origin(phi: ZonalBoundaryFunction) -> float:
    """|gradient| at the origin of the harmonic extension of zonal data,

        |grad u(0)| = 2 (n - 1) | integral t g(t) dsigma |.
    """
    ctx = phi.ctx
    moment = integrate_with_breakpoint(
        ctx.n, phi.order, lambda t: np.asarray(t, dtype=float) * phi.g(t), phi.kink
    )
    return 2.0 * (ctx.n - 1.0) * abs(moment)


def _poly_sup(coeffs: np.ndarray) -> float:
    """Exact sup of |polynomial| on [-1, 1] via critical points."""
    poly = np.polynomial.Polynomial(coeffs)
    candidates = [-1.0, 1.0]
    deriv = poly.deriv()
    if deriv.degree() >= 1:
        roots = deriv.roots()
        real = roots[np.abs(roots.imag) < 1e-12].real
        candidates.extend(float(x) for x in real if -1.0 < x < 1.0)
    return float(np.max(np.abs(poly(np.asarray(candidates)))))


def _random_poly_draws(n: int, count: int, seed: int, order: int):
    """Centered random polynomial draws of degree <= 8 on a zonal rule.

    Draw i uses the stream seeded by (seed, i), so results do not depend on
    evaluation order or batch size.  Returns the rule, the raw coefficient
    matrix, the mean of each draw, and the centered node values.
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count!r}")
    rule = build_rule(n, order)
    powers = rule.nodes[None, :] ** np.arange(9)[:, None]
    coeffs = np.stack(
        [np.random.default_rng([seed, i]).uniform(-1.0, 1.0, 9) for i in range(count)]
    )
    values = coeffs @ powers
    means = values @ rule.weights
    values -= means[:, None]
    return rule, coeffs, means, values


def _poly_norms(ctx: BallContext, rule, coeffs, means, values) -> np.ndarray:
    """p-norms of the centered draws; exact sup for p = inf."""
    if ctx.p == math.inf:
        centered = coeffs.copy()
        centered[:, 0] -= means
        return np.array([_poly_sup(c) for c in centered])
    return (np.abs(values) ** ctx.p @ rule.weights) ** (1.0 / ctx.p)


@dataclass(frozen=True)
class RandomBoundReport:
    count: int
    seed: int
    violations: int
    max_ratio: float


def random_bound_check(
    ctx: BallContext,
    r: float,
    count: int = 1000,
    seed: int = 42,
    order: int = DEFAULT_ORDER,
) -> RandomBoundReport:
    """Sample random centered polynomial boundary data against the bound.

    Tests |u(r axis)| <= G_p(r) ||g||_p * (1 + BOUND_SLACK) over ``count``
    draws.  Degenerate draws with ||g||_p = 0 count as ratio 0.
    """
    r = check_radius(r)
    rule, coeffs, means, values = _random_poly_draws(ctx.n, count, seed, order)
    kern = poisson_szego_axis(ctx, r, rule.nodes)
    u = values @ (rule.weights * kern)
    norms = _poly_norms(ctx, rule, coeffs, means, values)
    bound = g_p(ctx, r, order).g_value * norms
    positive = bound > 0.0
    ratio = np.zeros(count)
    ratio[positive] = np.abs(u[positive]) / bound[positive]
    violations = int(np.count_nonzero(np.abs(u) > bound * (1.0 + BOUND_SLACK)))
    return RandomBoundReport(count, seed, violations, float(ratio.max()))


def random_grad_check(
    ctx: BallContext,
    count: int = 1000,
    seed: int = 42,
    order: int = DEFAULT_ORDER,
) -> RandomBoundReport:
    """Sample random centered polynomial data against the gradient constant.

    Tests |grad u(0)| <= C_p ||g||_p * (1 + BOUND_SLACK), with the left side
    computed as 2 (n - 1) |integral t g dsigma|.
    """
    rule, coeffs, means, values = _random_poly_draws(ctx.n, count, seed, order)
    lhs = 2.0 * (ctx.n - 1.0) * np.abs(values @ (rule.weights * rule.nodes))
    norms = _poly_norms(ctx, rule, coeffs, means, values)
    bound = grad_constant(ctx) * norms
    positive = bound > 0.0
    ratio = np.zeros(count)
    ratio[positive] = lhs[positive] / bound[positive]
    violations = int(np.count_nonzero(lhs > bound * (1.0 + BOUND_SLACK)))
    return RandomBoundReport(count, seed, violations, float(ratio.max()))


def minimizing_sequence_p1(n: int, r: float, index: int, order: int = 64) -> float:
    """Value u_i(r axis) of the i-th normalized cap-pair boundary data.

    The data is +1/(2 sigma) on the polar cap of chord radius 1/i around the
    north pole (axis coordinate t >= 1 - 1/(2 i^2)), -1/(2 sigma) on its
    antipodal mirror, 0 elsewhere: unit L1 norm and zero mean by symmetry.
    The sequence increases to G_1(r) as i grows.
    """
    r = check_radius(r)
    if not (isinstance(index, int) and index >= 1):
        raise DomainError(f"sequence index must be an integer >= 1, got {index!r}")
    ctx = BallContext(n, 1.0)
    # indices past ~1e8 collapse the cap to zero width in doubles; clamping
    # keeps the square finite so they fail as CapUnderflowError, not overflow
    t_edge = 1.0 - 1.0 / (2.0 * min(float(index), 1e150) ** 2)
    nodes, weights = cap_rule(n, t_edge, order)
    sigma = float(np.sum(weights))
    plus = float(np.dot(weights, poisson_szego_axis(ctx, r, nodes)))
    minus = float(np.dot(weights, poisson_szego_axis(ctx, r, -nodes)))
    return (plus - minus) / (2.0 * sigma)


@dataclass(frozen=True)
class CorollaryL2Report:
    """Both candidate gradient constants evaluated on one L2 datum.

    ``rhs_sqrt`` uses sqrt(2(n-1)); ``rhs_moment`` uses the moment-based
    constant 2(n-1)/sqrt(n) that follows from the sharp gradient bound at
    q = 2.  Truthiness reflects the moment-based inequality, the one the
    sharp bound actually guarantees for zonal scalar data.
    """

    n: int
    lhs: float
    rhs_sqrt: float
    rhs_moment: float
    holds_sqrt: bool
    holds_moment: bool

    def __bool__(self) -> bool:
        return self.holds_moment


def corollary_l2_check(ctx: BallContext, phi: ZonalBoundaryFunction) -> CorollaryL2Report:
    """Compare |grad u(0)| against both candidate L2 corollary constants."""
    if ctx.p != 2.0:
        raise DomainError("the corollary comparison is specific to p = 2")
    centered = phi.centered()
    lhs = grad_at_origin(centered)
    rms = centered.norm
    rhs_sqrt = math.sqrt(2.0 * (ctx.n - 1.0)) * rms
    rhs_moment = grad_constant(ctx) * rms
    slack = 1.0 + BOUND_SLACK
    return CorollaryL2Report(
        n=ctx.n,
        lhs=lhs,
        rhs_sqrt=rhs_sqrt,
        rhs_moment=rhs_moment,
        holds_sqrt=lhs <= rhs_sqrt * slack + 2.0 ** -1022,
        holds_moment=lhs <= rhs_moment * slack + 2.0 ** -1022,
    )


@dataclass(frozen=True)
class CorollaryBatchReport:
    n: int
    count: int
    seed: int
    holds_sqrt: int
    holds_moment: int
    max_ratio_sqrt: float
    max_ratio_moment: float


def corollary_l2_batch(
    n: int, count: int = 1000, seed: int = 42, order: int = DEFAULT_ORDER
) -> CorollaryBatchReport:
    """Evaluate both corollary constants over seeded random polynomial data.

    Ratios are |grad u(0)| / (constant * ||g - mean||_2); a ratio above 1
    (modulo BOUND_SLACK) counts as a failure of that constant.
    """
    ctx = BallContext(n, 2.0)
    rule, _, _, values = _random_poly_draws(n, count, seed, order)
    lhs = 2.0 * (n - 1.0) * np.abs(values @ (rule.weights * rule.nodes))
    rms = np.sqrt(values ** 2 @ rule.weights)
    c_sqrt = math.sqrt(2.0 * (n - 1.0))
    c_moment = grad_constant(ctx)
    positive = rms > 0.0
    ratio_sqrt = np.zeros(count)
    ratio_moment = np.zeros(count)
    ratio_sqrt[positive] = lhs[positive] / (c_sqrt * rms[positive])
    ratio_moment[positive] = lhs[positive] / (c_moment * rms[positive])
    slack = 1.0 + BOUND_SLACK
    return CorollaryBatchReport(
        n=n,
        count=count,
        seed=seed,
        holds_sqrt=int(np.count_nonzero(ratio_sqrt <= slack)),
        holds_moment=int(np.count_nonzero(ratio_moment <= slack)),
        max_ratio_sqrt=float(ratio_sqrt.max()),
        max_ratio_moment=float(ratio_moment.max()),
    )
