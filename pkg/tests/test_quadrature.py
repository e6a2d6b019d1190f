"""Tests for composite Gauss quadrature, radial grids and radial L^p norms."""
import math

import numpy as np
import pytest

from smlab.errors import ConvergenceError, DomainError
from smlab.models.grids import RadialGrid
from smlab.models.results import RadialProfile
from smlab.models.specs import BumpSpec, QuadratureSpec
from smlab.quadrature.oscillatory import gauss_panels, integrate_oscillatory, panel_count_for
from smlab.quadrature.radial_norms import lp_norm_radial
from smlab.testfn.bump import chi


# ------------------------------------------------------------------
# integrate_oscillatory
# ------------------------------------------------------------------

class TestIntegrateOscillatory:
    def test_constant(self, quad):
        value = integrate_oscillatory(lambda r: np.ones_like(r), (0.0, 1.0), 0.0, quad)
        assert value == pytest.approx(1.0, abs=1e-14)

    def test_full_periods_cancel(self, quad):
        lam = 100.0
        value = integrate_oscillatory(
            lambda r: np.exp(-2j * math.pi * lam * r), (0.0, 1.0), 2 * math.pi * lam, quad,
        )
        assert abs(value) < quad.abs_tol

    def test_bump_times_phase_matches_oversampled_run(self, quad):
        lam = 64.0
        bump = BumpSpec()

        def amplitude(r):
            return chi(bump, r) * r * np.exp(-2j * math.pi * lam * r)

        freq = 2 * math.pi * lam
        value = integrate_oscillatory(amplitude, bump.support, freq, quad)
        fine = QuadratureSpec(quad.nodes_per_panel, quad.max_phase_per_panel / 10)
        reference = integrate_oscillatory(amplitude, bump.support, freq, fine)
        assert abs(value - reference) <= 1e-8 * max(abs(reference), 1e-5)

    def test_vector_amplitude(self, quad):
        def amplitude(r):
            return np.vstack([np.ones_like(r), r, r ** 2])

        values = integrate_oscillatory(amplitude, (0.0, 2.0), 0.0, quad)
        assert values.shape == (3,)
        assert np.allclose(values, [2.0, 2.0, 8.0 / 3.0], rtol=1e-13)

    def test_scalar_amplitude_returns_complex(self, quad):
        value = integrate_oscillatory(lambda r: r, (0.0, 1.0), 0.0, quad)
        assert isinstance(value, complex)

    def test_non_convergence_raises(self):
        spec = QuadratureSpec(nodes_per_panel=8, max_phase_per_panel=math.pi, rel_tol=1e-12)
        # frequency far above the declared bound
        with pytest.raises(ConvergenceError):
            integrate_oscillatory(lambda r: np.exp(400j * r), (0.0, 1.0), 1.0, spec)

    def test_rejects_bad_support(self, quad):
        with pytest.raises(DomainError):
            integrate_oscillatory(lambda r: r, (1.0, 0.0), 0.0, quad)

    def test_rejects_negative_frequency(self, quad):
        with pytest.raises(DomainError):
            integrate_oscillatory(lambda r: r, (0.0, 1.0), -1.0, quad)


class TestPanels:
    def test_panel_count(self, quad):
        # width pi/2 / (2 pi * 10.2) = 1/40.8
        assert panel_count_for((0.0, 1.0), 2 * math.pi * 10.2, quad) == 41

    def test_panel_count_floor_frequency(self, quad):
        assert panel_count_for((0.0, 1.0), 0.0, quad) == 1

    def test_gauss_panels_weights_sum_to_length(self):
        nodes, weights = gauss_panels((0.5, 2.0), 7, 16)
        assert nodes.shape == weights.shape == (112,)
        assert weights.sum() == pytest.approx(1.5, rel=1e-14)
        assert np.all((nodes > 0.5) & (nodes < 2.0))

    def test_gauss_panels_rejects_zero_panels(self):
        with pytest.raises(DomainError):
            gauss_panels((0.0, 1.0), 0, 16)


# ------------------------------------------------------------------
# RadialGrid
# ------------------------------------------------------------------

class TestRadialGrid:
    def test_from_panels_covers_length(self):
        grid = RadialGrid.from_panels([0.0, 0.5, 1.0, 3.0], 16)
        assert grid.size == 48
        assert grid.weights.sum() == pytest.approx(3.0, rel=1e-13)
        assert np.all(np.diff(grid.radii) > 0)

    def test_concatenate(self):
        a = RadialGrid.from_panels([0.0, 1.0], 8)
        b = RadialGrid.from_panels([1.0, 2.0, 4.0], 8)
        joined = RadialGrid.concatenate([a, b])
        assert joined.size == 24
        assert joined.covered_length == pytest.approx(4.0)

    def test_concatenate_empty(self):
        assert RadialGrid.concatenate([]).size == 0

    def test_rejects_decreasing_edges(self):
        with pytest.raises(DomainError):
            RadialGrid.from_panels([0.0, 2.0, 1.0], 8)

    def test_rejects_inconsistent_weights(self):
        with pytest.raises(DomainError):
            RadialGrid(np.array([0.1, 0.2]), np.array([0.5, 0.5]), 2.0)

    def test_rejects_overlap(self):
        a = RadialGrid.from_panels([0.0, 1.0], 8)
        with pytest.raises(DomainError):
            RadialGrid.concatenate([a, a])


# ------------------------------------------------------------------
# lp_norm_radial
# ------------------------------------------------------------------

class TestLpNormRadial:
    def test_indicator_of_unit_disk(self):
        grid = RadialGrid.from_panels([0.0, 1.0], 16)
        profile = RadialProfile(grid, np.ones(grid.size))
        assert lp_norm_radial(profile, 1.0, 2) == pytest.approx(math.pi, rel=1e-13)

    def test_gaussian_l2_in_plane(self):
        grid = RadialGrid.from_panels(np.linspace(0.0, 6.0, 25), 16)
        profile = RadialProfile(grid, np.exp(-math.pi * grid.radii ** 2))
        assert lp_norm_radial(profile, 2.0, 2) == pytest.approx(2 ** -0.5, rel=1e-12)

    def test_homogeneous(self):
        grid = RadialGrid.from_panels(np.linspace(0.0, 6.0, 25), 16)
        profile = RadialProfile(grid, np.exp(-math.pi * grid.radii ** 2))
        base = lp_norm_radial(profile, 3.0, 3)
        assert lp_norm_radial(profile.scaled(-2 + 1j), 3.0, 3) == pytest.approx(
            abs(-2 + 1j) * base, rel=1e-13,
        )

    def test_rejects_small_p(self):
        grid = RadialGrid.from_panels([0.0, 1.0], 8)
        with pytest.raises(DomainError):
            lp_norm_radial(RadialProfile(grid, np.ones(grid.size)), 0.5, 2)

    def test_rejects_empty_grid(self):
        empty = RadialGrid.concatenate([])
        with pytest.raises(DomainError):
            lp_norm_radial(RadialProfile(empty, np.empty(0)), 2.0, 2)
