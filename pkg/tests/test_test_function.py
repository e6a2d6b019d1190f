"""Tests for the bump chi, the test functions f_lambda and their norms."""
import math

import numpy as np
import pytest

from smlab.errors import DomainError
from smlab.lab.scaling import fit_power_law
from smlab.models.grids import RadialGrid
from smlab.models.specs import BumpSpec, MeansSpec, TestFunctionSpec
from smlab.testfn.bump import chi, smooth_step
from smlab.testfn.f_lambda import (
    envelope_order,
    envelope_ratios,
    f_lambda,
    f_lambda_batch,
    f_lambda_lp_norm,
    f_lambda_profile,
    profile_grid,
    truncation_radius,
)


# ------------------------------------------------------------------
# chi
# ------------------------------------------------------------------

class TestBump:
    def test_plateau(self):
        assert chi(BumpSpec(), 1.0) == 1.0
        assert chi(BumpSpec(), 0.75) == 1.0
        assert chi(BumpSpec(), 1.25) == 1.0

    def test_outside_support(self):
        assert chi(BumpSpec(), 3.0) == 0.0
        assert chi(BumpSpec(), 0.5) == 0.0
        assert chi(BumpSpec(), 0.1) == 0.0

    def test_rising_edge_monotone(self):
        r = np.linspace(0.5, 0.75, 201)
        values = chi(BumpSpec(), r)
        assert 0.0 < chi(BumpSpec(), 0.6) < 1.0
        assert np.all(np.diff(values) >= 0)

    def test_falling_edge_monotone(self):
        values = chi(BumpSpec(), np.linspace(1.25, 2.0, 301))
        assert np.all(np.diff(values) <= 0)

    def test_smooth_step_symmetry(self):
        u = np.linspace(0.0, 1.0, 11)
        assert np.allclose(smooth_step(u) + smooth_step(1.0 - u), 1.0)

    def test_invalid_plateau(self):
        with pytest.raises(DomainError):
            BumpSpec(support=(0.5, 2.0), plateau=(0.4, 1.0))


# ------------------------------------------------------------------
# f_lambda pointwise
# ------------------------------------------------------------------

class TestFLambda:
    def test_negligible_far_from_sphere(self, quad):
        lam = 256.0
        tf = TestFunctionSpec(MeansSpec(0.0, 2), lam)
        assert abs(f_lambda(tf, 8.0, quad)) < 1e-8 * lam ** 1.5

    def test_negligible_at_origin(self, quad):
        tf = TestFunctionSpec(MeansSpec(0.0, 2), 256.0)
        assert abs(f_lambda(tf, 1e-4, quad)) < 1e-6

    def test_sphere_value_scales_like_lambda_three_halves(self, quick_quad):
        constants = []
        for lam in (64.0, 128.0, 256.0):
            tf = TestFunctionSpec(MeansSpec(0.0, 2), lam)
            constants.append(abs(f_lambda(tf, 1.0, quick_quad)) / lam ** 1.5)
        assert min(constants) > 0
        assert max(constants) / min(constants) < 1.1

    @pytest.mark.slow
    def test_sphere_constant_stable_to_1024(self, quad):
        constants = []
        for k in range(6, 11):
            lam = 2.0 ** k
            tf = TestFunctionSpec(MeansSpec(0.0, 2), lam)
            constants.append(abs(f_lambda(tf, 1.0, quad)) / lam ** 1.5)
        assert max(constants) / min(constants) < 1.1

    def test_independent_of_re_alpha(self, quick_quad):
        a = TestFunctionSpec(MeansSpec(0.2, 2), 64.0)
        b = TestFunctionSpec(MeansSpec(-0.7, 2), 64.0)
        assert f_lambda(a, 0.97, quick_quad) == f_lambda(b, 0.97, quick_quad)

    def test_batch_matches_single(self, quick_quad, tf_2d):
        radii = np.array([0.2, 0.9, 1.0, 1.3])
        batch = f_lambda_batch(tf_2d, radii, quick_quad)
        for r, v in zip(radii, batch):
            assert abs(f_lambda(tf_2d, float(r), quick_quad) - v) <= 1e-9 * max(abs(v), 1.0)

    def test_lambda_floor(self):
        with pytest.raises(DomainError):
            TestFunctionSpec(MeansSpec(0.0, 2), 2.0)

    def test_negative_radius(self, quick_quad, tf_2d):
        with pytest.raises(DomainError):
            f_lambda(tf_2d, -0.1, quick_quad)


# ------------------------------------------------------------------
# Envelopes
# ------------------------------------------------------------------

class TestEnvelopes:
    def test_envelope_order(self):
        assert envelope_order(2, 4.0) == 4
        assert envelope_order(10, 1.0) == 11

    def test_ratios_on_synthetic_samples(self, tf_2d):
        lam = tf_2d.lam
        radii = np.array([0.5 / lam, 0.5, 1.0, 1.1])
        values = np.array([3.0, 2.0 * lam * (lam * 0.5) ** -4, lam ** 1.5, 0.5 * lam ** 1.5 * 1.1 ** -0.5])
        ratios = envelope_ratios(tf_2d, radii, values)
        assert ratios.origin_max == pytest.approx(3.0)
        assert ratios.off_sphere_ratio == pytest.approx(2.0)
        assert ratios.near_sphere_ratio == pytest.approx(1.0)

    def test_missing_regime_is_none(self, tf_2d):
        ratios = envelope_ratios(tf_2d, [1.0], [1.0])
        assert ratios.origin_max is None
        assert ratios.off_sphere_ratio is None

    def test_near_sphere_ratio_stable(self, quick_quad):
        radii = 1.0 + np.linspace(-0.2, 0.2, 41)
        measured = []
        for lam in (64.0, 128.0):
            tf = TestFunctionSpec(MeansSpec(0.0, 2), lam)
            values = f_lambda_batch(tf, radii, quick_quad)
            measured.append(envelope_ratios(tf, radii, values).near_sphere_ratio)
        assert 1 / 1.5 < measured[1] / measured[0] < 1.5

    def test_length_mismatch(self, tf_2d):
        with pytest.raises(DomainError):
            envelope_ratios(tf_2d, [0.5, 1.0], [1.0])


# ------------------------------------------------------------------
# Profiles and norms
# ------------------------------------------------------------------

class TestProfile:
    def test_grid_covers_truncation_interval(self, tf_2d):
        grid = profile_grid(tf_2d, 2.0)
        radius = truncation_radius(tf_2d, 2.0)
        assert grid.covered_length == pytest.approx(radius)
        assert grid.radii[0] > 0
        assert radius >= 2.0

    def test_grid_dense_at_sphere(self, tf_2d):
        grid = profile_grid(tf_2d)
        near = np.abs(grid.radii - 1.0) < 1.0 / tf_2d.lam
        # panels of width 1/(2 lambda) with 16 nodes each
        assert near.sum() >= 4 * 16

    def test_profile_labelled(self, quick_quad, tf_2d):
        profile = f_lambda_profile(tf_2d, quick_quad, 2.0)
        assert profile.values.shape == profile.radii.shape
        assert "64" in profile.label
        assert abs(profile.argmax_radius() - 1.0) < 0.05

    def test_plancherel(self, quick_quad):
        # ||f_lambda||_2^2 = 2 pi lambda^2 int chi(r)^2 r dr in the plane
        lam = 64.0
        tf = TestFunctionSpec(MeansSpec(0.0, 2), lam)
        grid = RadialGrid.from_panels(np.linspace(0.5, 2.0, 61), 16)
        mass = float(np.dot(grid.weights, chi(tf.bump, grid.radii) ** 2 * grid.radii))
        expected = math.sqrt(2 * math.pi * lam ** 2 * mass)
        assert f_lambda_lp_norm(tf, 2.0, quick_quad) == pytest.approx(expected, rel=1e-3)

    @pytest.mark.parametrize("p, predicted", [(2.0, 1.0), (4.0, 1.25)])
    def test_norm_growth(self, quick_quad, p, predicted):
        lambdas = [64.0, 128.0, 256.0]
        norms = [
            f_lambda_lp_norm(TestFunctionSpec(MeansSpec(0.0, 2), lam), p, quick_quad)
            for lam in lambdas
        ]
        slope, _, r_squared, _ = fit_power_law(lambdas, norms)
        assert slope == pytest.approx(predicted, abs=0.05)
        assert r_squared > 0.99

    @pytest.mark.slow
    @pytest.mark.parametrize("p, predicted", [(2.0, 1.0), (4.0, 1.25)])
    def test_norm_growth_full_window(self, quad, p, predicted):
        lambdas = [2.0 ** k for k in range(6, 12)]
        norms = [
            f_lambda_lp_norm(TestFunctionSpec(MeansSpec(0.0, 2), lam), p, quad, threads=4)
            for lam in lambdas
        ]
        slope, _, _, _ = fit_power_law(lambdas, norms)
        assert slope == pytest.approx(predicted, abs=0.05)

    def test_norm_rejects_small_p(self, quick_quad, tf_2d):
        with pytest.raises(DomainError):
            f_lambda_lp_norm(tf_2d, 0.5, quick_quad)
