"""End-to-end acceptance criteria.

Each criterion function exercises one published guarantee of the package at
its stated tolerance and returns a :class:`CriterionResult`; ``run_all``
executes the whole battery.  The same runners back ``hypschwarz check`` and
the acceptance test module, so the gate is identical everywhere.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .kernel import BallContext, kernel_range, poisson_szego_axis
from .objective import ObjectiveParams, big_f, dF_da, phi
from .quadrature import integrate_with_breakpoint
from .solver import (
    g_1_closed,
    g_2_closed,
    g_inf_closed,
    g_p,
    gp_derivative_at_zero,
    grad_constant,
    solve_a_star,
    uh_elementary,
)
from .verify import (
    ZonalBoundaryFunction,
    corollary_l2_batch,
    corollary_l2_check,
    grad_at_origin,
    minimizing_sequence_p1,
    moment_extremal,
    random_bound_check,
    random_grad_check,
    verify_sharpness,
)

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

_DIMS = (3, 4, 5)
_FINITE_PS = (1.5, 2.0, 3.0, 5.0)
_RADII = (0.2, 0.5, 0.8)


def golden_section_minimize(fn, lo: float, hi: float, tol: float) -> float:
    """Plain golden-section minimizer for a unimodal function on [lo, hi].

    Used as the derivative-free cross-check against root-based optimizers.
    """
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = fn(d)
    return 0.5 * (a + b)


@dataclass(frozen=True)
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CRITERION {self.index} [{status}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _finish(index: int, name: str, started: float, passed: bool, detail: str) -> CriterionResult:
    return CriterionResult(index, name, passed, detail, time.perf_counter() - started)


def criterion_1() -> CriterionResult:
    """Elementary G_inf forms in dimensions 3-5 reproduced by both routes."""
    started = time.perf_counter()
    worst = 0.0
    for n in _DIMS:
        for r in (0.1, 0.25, 0.5, 0.75, 0.9):
            target = uh_elementary(n, r)
            a_star, closed = g_inf_closed(n, r)
            ctx = BallContext(n, math.inf)
            # Order 512 gives 64-point panels, enough to resolve the kernel
            # peak near t = 1 (its pole sits at (1+r^2)/(2r), just outside).
            numeric = integrate_with_breakpoint(
                n, 512, lambda t: np.abs(poisson_szego_axis(ctx, r, t) - a_star), 0.0
            )
            worst = max(worst, abs(closed - target), abs(numeric - target))
    passed = worst <= 1e-8
    elapsed = time.perf_counter() - started
    return CriterionResult(
        1, "boundary-norm table, dims 3-5", passed and elapsed < 1.0,
        f"max abs deviation {worst:.2e}, elapsed {elapsed:.3f}s (budget 1s)", elapsed,
    )


def criterion_2() -> CriterionResult:
    """Numeric p = 2 bound against its hypergeometric closed form."""
    started = time.perf_counter()
    worst_g = 0.0
    worst_a = 0.0
    for n in _DIMS:
        ctx = BallContext(n, 2.0)
        for r in np.arange(0.0, 0.8001, 0.1):
            r = float(r)
            res = g_p(ctx, r)
            worst_g = max(worst_g, abs(res.g_value - g_2_closed(n, r)))
            worst_a = max(worst_a, abs(res.a_star - 1.0))
    passed = worst_g <= 1e-8 and worst_a <= 1e-10
    elapsed = time.perf_counter() - started
    return CriterionResult(
        2, "p = 2 closed form", passed and elapsed < 5.0,
        f"max |g - closed| {worst_g:.2e}, max |a* - 1| {worst_a:.2e}, elapsed {elapsed:.2f}s (budget 5s)",
        elapsed,
    )


def criterion_3() -> CriterionResult:
    """p = 1 closed form vs direct sup-distance minimization; cap sequence."""
    started = time.perf_counter()
    worst = 0.0
    for n in _DIMS:
        ctx = BallContext(n, 1.0)
        for r in _RADII:
            kmin, kmax = kernel_range(ctx, r)
            sup_dist = lambda a: max(kmax - a, a - kmin)
            center = golden_section_minimize(sup_dist, kmin, kmax, 1e-13 * max(1.0, kmax))
            a_closed, g_closed = g_1_closed(n, r)
            worst = max(
                worst,
                abs(center - a_closed) / a_closed,
                abs(sup_dist(center) - g_closed) / g_closed,
            )
    seq = minimizing_sequence_p1(3, 0.5, 64)
    target = 40.0 / 9.0
    seq_gap = abs(seq - target) / target
    passed = worst <= 1e-12 and seq_gap <= 0.02
    elapsed = time.perf_counter() - started
    return CriterionResult(
        3, "p = 1 closed form and cap sequence", passed and elapsed < 5.0,
        f"max rel dev {worst:.2e}, cap-64 gap {seq_gap:.2e} (limit 2e-2), elapsed {elapsed:.2f}s (budget 5s)",
        elapsed,
    )


def criterion_4(order: int = 512) -> CriterionResult:
    """Stationarity of the optimal shift on the (n, p, r) grid.

    The golden-section cross-check targets 1e-7 agreement on the shift.  At
    cells where the objective is flat on that scale (its curvature makes
    the minimum location unresolvable to 1e-7 in double precision) the
    comparison instead uses the standard resolution limit of derivative-free
    minimization, sqrt(c * eps * Phi / Phi''), documented in the ledger.
    """
    started = time.perf_counter()
    worst_res = 0.0
    worst_ratio = 0.0
    limited_cells = 0
    ok_signs = True
    ok_origin = True
    eps = 2.0 ** -52
    for n in _DIMS:
        for p in _FINITE_PS:
            ctx = BallContext(n, p)
            ok_origin &= solve_a_star(ctx, 0.0) == 1.0
            for r in _RADII:
                params = ObjectiveParams(ctx, r, order)
                a_star = solve_a_star(ctx, r, order)
                worst_res = max(worst_res, abs(big_f(params, a_star)))
                slope = dF_da(params, a_star)
                ok_signs &= slope < 0.0
                kmin, kmax = kernel_range(ctx, r)
                width = kmax - kmin
                gold = golden_section_minimize(
                    lambda a: phi(params, a),
                    kmin + 1e-12 * width,
                    kmax - 1e-12 * width,
                    1e-9 * max(1.0, a_star),
                )
                gap = abs(gold - a_star)
                base_tol = 1e-7 * max(1.0, a_star)
                value = phi(params, a_star)
                curvature = -slope * value ** (1.0 - ctx.q)
                resolution = math.sqrt(64.0 * eps * value / curvature)
                if resolution > base_tol:
                    limited_cells += 1
                worst_ratio = max(worst_ratio, gap / max(base_tol, resolution))
    passed = worst_res <= 1e-9 and worst_ratio <= 1.0 and ok_signs and ok_origin
    return _finish(
        4, "shift stationarity", started, passed,
        f"max |F(a*)| {worst_res:.2e}, worst golden gap at {worst_ratio:.2f} of its "
        f"tolerance ({limited_cells} flat cells on the resolution limit), "
        f"slopes negative: {ok_signs}, a*(0)=1: {ok_origin}",
    )


def criterion_5() -> CriterionResult:
    """Extremal data attains the bound on the full grid plus p = inf."""
    started = time.perf_counter()
    worst = 0.0
    for n in _DIMS:
        for p in _FINITE_PS + (math.inf,):
            ctx = BallContext(n, p)
            for r in _RADII:
                worst = max(worst, verify_sharpness(ctx, r).rel_gap)
    passed = worst <= 1e-6
    elapsed = time.perf_counter() - started
    return CriterionResult(
        5, "sharpness gap", passed and elapsed < 30.0,
        f"max relative gap {worst:.2e}, elapsed {elapsed:.2f}s (budget 30s)", elapsed,
    )


def criterion_6() -> CriterionResult:
    """Gradient constant: attained by the moment extremal, matched by the
    r -> 0 slope, never exceeded by random data."""
    started = time.perf_counter()
    worst_extremal = 0.0
    for n in _DIMS:
        for p in _FINITE_PS + (math.inf,):
            ctx = BallContext(n, p)
            datum = moment_extremal(ctx)
            ratio = grad_at_origin(datum) / datum.norm
            worst_extremal = max(worst_extremal, abs(ratio - grad_constant(ctx)) / grad_constant(ctx))
    worst_fd = 0.0
    for n in (3, 4):
        for p in (2.0, 3.0, math.inf):
            ctx = BallContext(n, p)
            slope = gp_derivative_at_zero(ctx, 1e-4)
            worst_fd = max(worst_fd, abs(slope - grad_constant(ctx)) / grad_constant(ctx))
    violations = 0
    worst_random = 0.0
    for n in _DIMS:
        for p in _FINITE_PS + (math.inf,):
            report = random_grad_check(BallContext(n, p), count=1000, seed=42)
            violations += report.violations
            worst_random = max(worst_random, report.max_ratio)
    passed = worst_extremal <= 1e-9 and worst_fd <= 1e-2 and violations == 0
    return _finish(
        6, "gradient constant", started, passed,
        f"extremal gap {worst_extremal:.2e}, slope gap {worst_fd:.2e}, "
        f"random violations {violations} (max ratio {worst_random:.6f})",
    )


def criterion_7() -> CriterionResult:
    """Random boundary data never violates the bound (two seeds, full grid)."""
    started = time.perf_counter()
    violations = 0
    worst = 0.0
    for seed in (7, 42):
        for n in _DIMS:
            for p in _FINITE_PS:
                ctx = BallContext(n, p)
                for r in _RADII:
                    report = random_bound_check(ctx, r, count=1000, seed=seed)
                    violations += report.violations
                    worst = max(worst, report.max_ratio)
    passed = violations == 0
    elapsed = time.perf_counter() - started
    return CriterionResult(
        7, "random bound property", passed and elapsed < 60.0,
        f"violations {violations} over 72000 draws, max ratio {worst:.6f}, "
        f"elapsed {elapsed:.2f}s (budget 60s)", elapsed,
    )


def criterion_8() -> CriterionResult:
    """Monotone growth in r; the p = inf bound stays inside [0, 1)."""
    started = time.perf_counter()
    radii = np.arange(0.0, 0.9501, 0.05)
    monotone = True
    inf_in_range = True
    for n in _DIMS:
        for p in (1.0,) + _FINITE_PS + (math.inf,):
            ctx = BallContext(n, p)
            values = [g_p(ctx, float(r)).g_value for r in radii]
            monotone &= all(b > a for a, b in zip(values, values[1:]))
            if p == math.inf:
                inf_in_range &= all(0.0 <= v < 1.0 for v in values)
    near_boundary = all(g_inf_closed(n, 0.999)[1] > 0.99 for n in _DIMS)
    inf_in_range &= all(g_inf_closed(n, 0.999)[1] < 1.0 for n in _DIMS)
    passed = monotone and inf_in_range and near_boundary
    return _finish(
        8, "growth and range", started, passed,
        f"strictly increasing: {monotone}, G_inf in [0,1): {inf_in_range}, "
        f"G_inf(0.999) > 0.99: {near_boundary}",
    )


def criterion_9() -> CriterionResult:
    """Empirical comparison of the two candidate L2 gradient constants."""
    started = time.perf_counter()
    lines = []
    all_moment = True
    for n in _DIMS:
        batch = corollary_l2_batch(n, count=1000, seed=42)
        all_moment &= batch.holds_moment == batch.count
        lines.append(
            f"n={n}: moment constant 2(n-1)/sqrt(n) holds {batch.holds_moment}/{batch.count} "
            f"(max ratio {batch.max_ratio_moment:.6f}); sqrt(2(n-1)) holds "
            f"{batch.holds_sqrt}/{batch.count} (max ratio {batch.max_ratio_sqrt:.6f})"
        )
    ctx3 = BallContext(3, 2.0)
    witness = corollary_l2_check(
        ctx3, ZonalBoundaryFunction(g=lambda t: np.asarray(t, dtype=float), ctx=ctx3)
    )
    lines.append(
        f"witness g(t)=t, n=3: lhs {witness.lhs:.9f}, sqrt-form rhs {witness.rhs_sqrt:.9f} "
        f"(holds: {witness.holds_sqrt}), moment-form rhs {witness.rhs_moment:.9f} "
        f"(holds: {witness.holds_moment})"
    )
    resolution = (
        "resolution: the moment-based constant is the one the sharp gradient bound "
        "guarantees for scalar zonal data; the sqrt form is smaller for n >= 3 and the "
        "linear witness exceeds it"
    )
    passed = all_moment and witness.holds_moment
    return _finish(9, "L2 corollary constants", started, passed, "; ".join(lines + [resolution]))


def run_all() -> list[CriterionResult]:
    return [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ]
