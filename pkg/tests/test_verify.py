import math

import numpy as np
import pytest

from hypschwarz import (
    BallContext,
    CapUnderflowError,
    DomainError,
    ZonalBoundaryFunction,
    corollary_l2_batch,
    corollary_l2_check,
    crossing_point,
    extremal_phi,
    g_1_closed,
    grad_at_origin,
    grad_constant,
    minimizing_sequence_p1,
    moment_extremal,
    poisson_integral_axis,
    random_bound_check,
    random_grad_check,
    uh_elementary,
    verify_sharpness,
)


def identity_data(ctx):
    return ZonalBoundaryFunction(g=lambda t: np.asarray(t, dtype=float), ctx=ctx)


class TestZonalBoundaryFunction:
    def test_mean_and_l2_norm_of_identity(self):
        f = identity_data(BallContext(3, 2.0))
        assert f.mean == pytest.approx(0.0, abs=1e-13)
        assert f.norm == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-12)

    def test_sup_norm_of_identity(self):
        f = identity_data(BallContext(3, math.inf))
        assert f.norm == pytest.approx(1.0, rel=1e-12)

    def test_centered_removes_mean(self):
        f = ZonalBoundaryFunction(g=lambda t: np.asarray(t, dtype=float) + 2.0,
                                  ctx=BallContext(4, 2.0))
        assert f.mean == pytest.approx(2.0, rel=1e-12)
        assert f.centered().mean == pytest.approx(0.0, abs=1e-12)


class TestPoissonIntegral:
    def test_constant_extends_to_itself(self):
        f = ZonalBoundaryFunction(g=lambda t: np.ones_like(np.asarray(t, dtype=float)),
                                  ctx=BallContext(4, 2.0), order=256)
        for r in (0.0, 0.3, 0.9):
            assert poisson_integral_axis(f, r) == pytest.approx(1.0, abs=1e-10)

    def test_sign_data_matches_equator_split(self):
        # the extension of sign(t) on the axis is the harmonic-measure gap
        f = ZonalBoundaryFunction(g=np.sign, ctx=BallContext(3, math.inf), kink=0.0)
        for r in (0.2, 0.5, 0.8):
            assert poisson_integral_axis(f, r) == pytest.approx(
                uh_elementary(3, r), rel=1e-8
            )


class TestExtremalPhi:
    def test_zero_mean_and_declared_kink(self):
        ctx = BallContext(3, 1.5)
        f = extremal_phi(ctx, 0.5)
        assert abs(f.mean) <= 1e-9
        a_star = None
        from hypschwarz import solve_a_star
        a_star = solve_a_star(ctx, 0.5)
        assert f.kink == pytest.approx(crossing_point(ctx, 0.5, a_star), rel=1e-12)

    def test_rejects_degenerate_sites(self):
        with pytest.raises(DomainError):
            extremal_phi(BallContext(3, 1.0), 0.5)
        with pytest.raises(DomainError):
            extremal_phi(BallContext(3, 2.0), 0.0)


class TestSharpness:
    def test_extremal_attains_bound(self):
        for n, p, r in ((3, 2.0, 0.5), (4, 3.0, 0.3), (3, math.inf, 0.5)):
            report = verify_sharpness(BallContext(n, p), r)
            assert report.rel_gap <= 1e-6
        inf_report = verify_sharpness(BallContext(3, math.inf), 0.5)
        assert inf_report.g_bound == pytest.approx(0.8, rel=1e-8)

    def test_p1_uses_cap_sequence(self):
        report = verify_sharpness(BallContext(3, 1.0), 0.5)
        assert report.rel_gap <= 0.02
        assert report.g_bound == pytest.approx(40.0 / 9.0, rel=1e-14)

    def test_center_raises(self):
        with pytest.raises(DomainError):
            verify_sharpness(BallContext(3, 2.0), 0.0)


class TestGradAtOrigin:
    def test_even_data_has_no_gradient(self):
        f = ZonalBoundaryFunction(g=lambda t: np.asarray(t, dtype=float) ** 2,
                                  ctx=BallContext(3, 2.0))
        assert grad_at_origin(f) == pytest.approx(0.0, abs=1e-13)

    def test_identity_data_gradient(self):
        # 2(n-1) * integral t^2 dsigma = 4/3 in dimension 3
        f = identity_data(BallContext(3, 2.0))
        assert grad_at_origin(f) == pytest.approx(4.0 / 3.0, rel=1e-12)


class TestMomentExtremal:
    def test_attains_gradient_constant(self):
        for n, p in ((3, 2.0), (4, 3.0), (3, 1.5), (3, math.inf)):
            ctx = BallContext(n, p)
            f = moment_extremal(ctx)
            ratio = grad_at_origin(f) / (grad_constant(ctx) * f.norm)
            assert ratio == pytest.approx(1.0, rel=1e-9)

    def test_p1_rejected(self):
        with pytest.raises(DomainError):
            moment_extremal(BallContext(3, 1.0))


class TestRandomChecks:
    def test_bound_holds_on_random_draws(self):
        for ctx in (BallContext(3, 2.0), BallContext(3, math.inf)):
            report = random_bound_check(ctx, 0.5, count=300, seed=7)
            assert report.violations == 0
            assert report.max_ratio <= 1.0

    def test_gradient_bound_holds_on_random_draws(self):
        for ctx in (BallContext(3, 2.0), BallContext(4, math.inf)):
            report = random_grad_check(ctx, count=300, seed=7)
            assert report.violations == 0
            assert report.max_ratio <= 1.0

    def test_seeded_determinism(self):
        ctx = BallContext(4, 3.0)
        first = random_bound_check(ctx, 0.6, count=100, seed=11)
        second = random_bound_check(ctx, 0.6, count=100, seed=11)
        assert first == second

    def test_count_validation(self):
        with pytest.raises(DomainError):
            random_bound_check(BallContext(3, 2.0), 0.5, count=0)


class TestMinimizingSequence:
    def test_increases_to_the_bound(self):
        n, r = 3, 0.5
        g1 = g_1_closed(n, r)[1]
        values = [minimizing_sequence_p1(n, r, i) for i in (2, 4, 8, 16, 32, 64)]
        assert np.all(np.diff(values) > 0.0)
        assert all(v <= g1 * (1.0 + 1e-9) for v in values)
        assert values[-1] == pytest.approx(g1, rel=0.02)

    def test_index_validation(self):
        with pytest.raises(DomainError):
            minimizing_sequence_p1(3, 0.5, 0)
        with pytest.raises(DomainError):
            minimizing_sequence_p1(3, 0.5, 2.5)

    def test_cap_underflow_at_extreme_index(self):
        with pytest.raises(CapUnderflowError):
            minimizing_sequence_p1(3, 0.5, 10 ** 170)


class TestCorollary:
    def test_constant_data_holds_trivially(self):
        ctx = BallContext(3, 2.0)
        f = ZonalBoundaryFunction(g=lambda t: np.full_like(np.asarray(t, dtype=float), 5.0),
                                  ctx=ctx)
        report = corollary_l2_check(ctx, f)
        assert report.holds_sqrt and report.holds_moment and bool(report)

    def test_identity_data_separates_the_constants(self):
        ctx = BallContext(3, 2.0)
        report = corollary_l2_check(ctx, identity_data(ctx))
        assert report.holds_moment and not report.holds_sqrt
        assert report.lhs == pytest.approx(4.0 / 3.0, rel=1e-9)
        assert report.rhs_moment == pytest.approx(4.0 / 3.0, rel=1e-9)
        assert report.rhs_sqrt == pytest.approx(2.0 / math.sqrt(3.0), rel=1e-9)
        assert bool(report) is report.holds_moment

    def test_requires_p2_context(self):
        ctx = BallContext(3, 3.0)
        with pytest.raises(DomainError):
            corollary_l2_check(ctx, identity_data(ctx))

    def test_batch_moment_constant_always_holds(self):
        report = corollary_l2_batch(3, count=300, seed=5)
        assert report.holds_moment == report.count == 300
        assert report.max_ratio_moment <= 1.0

    def test_batch_ratio_scale_identity(self):
        # both ratios scale the same lhs, so their max quotient is fixed
        report = corollary_l2_batch(4, count=100, seed=9)
        c_sqrt = math.sqrt(6.0)
        c_moment = grad_constant(BallContext(4, 2.0))
        assert report.max_ratio_sqrt / report.max_ratio_moment == pytest.approx(
            c_moment / c_sqrt, rel=1e-12
        )
