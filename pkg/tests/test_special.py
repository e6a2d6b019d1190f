"""Tests for the complex Gamma function and Bessel functions of complex order."""
import cmath
import math

import mpmath
import numpy as np
import pytest
from scipy import special as sp

from smlab.errors import DomainError, PoleError
from smlab.special.bessel import (
    BesselRoute,
    asymptotic_coeffs,
    asymptotic_min_radius,
    bessel_j,
    bessel_j_asymptotic,
    bessel_j_scaled,
    bessel_j_series,
    crossover_radius,
    leading_two_wave,
)
from smlab.special.gamma import gamma_complex, nearest_pole, reciprocal_gamma


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / abs(b)


# ------------------------------------------------------------------
# Gamma
# ------------------------------------------------------------------

class TestGamma:
    def test_factorials(self):
        assert gamma_complex(1) == pytest.approx(1.0, rel=1e-13)
        assert gamma_complex(5) == pytest.approx(24.0, rel=1e-13)

    def test_half(self):
        assert gamma_complex(0.5).real == pytest.approx(math.sqrt(math.pi), rel=1e-12)

    def test_reflection_branch(self):
        assert gamma_complex(-0.5).real == pytest.approx(-2 * math.sqrt(math.pi), rel=1e-12)

    @pytest.mark.parametrize("z", [1.3 + 0.2j, 0.1 - 2j, -2.5 + 0.5j, 7 + 3j, 20.5])
    def test_matches_scipy(self, z):
        assert _rel(gamma_complex(z), complex(sp.gamma(z))) < 1e-12

    @pytest.mark.parametrize("z", [0, -1, -7, -3 + 1e-16j])
    def test_poles_raise(self, z):
        with pytest.raises(PoleError):
            gamma_complex(z)

    def test_pole_error_is_domain_error(self):
        with pytest.raises(DomainError):
            gamma_complex(-2)

    def test_reciprocal_is_zero_at_poles(self):
        assert reciprocal_gamma(0) == 0
        assert reciprocal_gamma(-4) == 0

    def test_reciprocal_matches_inverse(self):
        z = 0.7 - 1.1j
        assert _rel(reciprocal_gamma(z), 1 / gamma_complex(z)) < 1e-13

    def test_nearest_pole(self):
        assert nearest_pole(-3.0) == -3
        assert nearest_pole(-3.1) is None
        assert nearest_pole(2.0) is None

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            gamma_complex(complex(math.nan, 0))


# ------------------------------------------------------------------
# Power series
# ------------------------------------------------------------------

class TestBesselSeries:
    def test_order_zero_at_origin(self):
        assert bessel_j_series(0, 0.0) == 1

    def test_positive_order_vanishes_at_origin(self):
        assert bessel_j_series(2, 0.0) == 0

    def test_undefined_at_origin_for_nonpositive_order(self):
        with pytest.raises(DomainError):
            bessel_j_series(-0.5, 0.0)

    def test_half_order_closed_form(self):
        assert abs(bessel_j_series(0.5, math.pi)) < 1e-14

    @pytest.mark.parametrize("beta", [0.0, 1.0, 2.5, 7.0])
    def test_matches_scipy_real_orders(self, beta):
        r = np.array([0.1, 1.0, 5.0, 11.5])
        ours = bessel_j_series(beta, r)
        ref = sp.jv(beta, r)
        assert np.all(np.abs(ours - ref) <= 1e-11 * np.maximum(np.abs(ref), 1e-3))

    @pytest.mark.parametrize("beta", [0.3 + 0.2j, -0.7 + 1.5j, 1.2 - 0.4j])
    def test_matches_mpmath_complex_orders(self, beta):
        for r in (0.5, 3.0, 9.0):
            ref = complex(mpmath.besselj(beta, r))
            assert abs(bessel_j_series(beta, r) - ref) <= 1e-12 * max(abs(ref), 1e-3)

    def test_negative_integer_reflection(self):
        r = np.array([0.5, 2.0, 6.0])
        assert np.allclose(bessel_j_series(-1, r), -bessel_j_series(1, r), rtol=1e-14, atol=0)
        assert np.allclose(bessel_j_series(-2, r), bessel_j_series(2, r), rtol=1e-14, atol=0)

    def test_negative_integer_at_origin_is_zero(self):
        assert bessel_j_series(-3, 0.0) == 0

    def test_guard_digits_past_double_range(self):
        # r = 50 needs about 22 extra digits of cancellation
        assert abs(bessel_j_series(0, 50.0) - sp.jv(0, 50.0)) < 1e-12

    def test_scaled_value_at_origin(self):
        beta = 0.3 + 0.2j
        assert _rel(bessel_j_scaled(beta, 0.0), 1 / gamma_complex(beta + 1)) < 1e-13

    def test_negative_radius_rejected(self):
        with pytest.raises(DomainError):
            bessel_j_series(0, -1.0)


# ------------------------------------------------------------------
# Two-wave expansion
# ------------------------------------------------------------------

class TestBesselAsymptotic:
    def test_half_order_is_exact(self):
        expected = math.sqrt(2 / (20 * math.pi)) * math.sin(20)
        assert abs(bessel_j_asymptotic(0.5, 20.0) - expected) < 1e-14

    def test_agrees_with_series_at_fifty(self):
        series = bessel_j_series(0, 50.0)
        assert _rel(bessel_j_asymptotic(0, 50.0), series) < 1e-8

    def test_below_min_radius_rejected(self):
        with pytest.raises(DomainError):
            bessel_j_asymptotic(0, 0.5)
        with pytest.raises(DomainError):
            bessel_j_asymptotic(5.0, 4.0)

    def test_min_radius(self):
        assert asymptotic_min_radius(0) == 1.0
        assert asymptotic_min_radius(3 + 4j) == pytest.approx(5.0)

    def test_envelope_bounded(self):
        coeffs = asymptotic_coeffs(0)
        r = np.linspace(20, 2000, 500)
        scaled = np.abs(bessel_j(0, r)) * np.sqrt(r)
        assert np.all(scaled <= abs(coeffs.b0) + abs(coeffs.d0) + 1.0 / r)

    def test_leading_two_wave_error_decays(self):
        for r in (100.0, 1000.0):
            err = abs(leading_two_wave(1.0, r) - bessel_j(1.0, r))
            assert err * r ** 1.5 < 1.0


class TestAsymptoticCoeffs:
    def test_leading_moduli_for_real_order(self):
        coeffs = asymptotic_coeffs(1.5)
        assert abs(coeffs.b0) == pytest.approx(1 / math.sqrt(2 * math.pi))
        assert abs(coeffs.d0) == pytest.approx(1 / math.sqrt(2 * math.pi))

    def test_phases(self):
        beta = 0.25
        coeffs = asymptotic_coeffs(beta)
        phi = beta * math.pi / 2 + math.pi / 4
        assert cmath.phase(coeffs.b0) == pytest.approx(-phi)
        assert cmath.phase(coeffs.d0) == pytest.approx(phi)

    def test_half_order_terminates(self):
        coeffs = asymptotic_coeffs(0.5, num_terms=4)
        assert all(b == 0 and d == 0 for b, d in coeffs.correction_terms)

    def test_first_correction(self):
        beta = 1.0
        coeffs = asymptotic_coeffs(beta, num_terms=1)
        a1 = (4 * beta ** 2 - 1) / 8
        b1, d1 = coeffs.correction_terms[0]
        assert b1 == pytest.approx(coeffs.b0 * 1j * a1)
        assert d1 == pytest.approx(coeffs.d0 * -1j * a1)

    def test_to_dict(self):
        data = asymptotic_coeffs(0, num_terms=2).to_dict()
        assert set(data) == {"b0", "d0", "correction_terms"}
        assert len(data["correction_terms"]) == 2


# ------------------------------------------------------------------
# Dispatch
# ------------------------------------------------------------------

class TestBesselDispatch:
    def test_origin(self):
        assert bessel_j(0, 0.0) == 1

    def test_crossover(self):
        assert crossover_radius(1.0) == 12.0
        assert crossover_radius(5.0) == 25.0

    def test_continuous_across_crossover(self):
        cross = crossover_radius(1.0)
        below = bessel_j(1.0, cross - 1e-9)
        above = bessel_j(1.0, cross + 1e-9)
        assert _rel(above, below) < 1e-9

    def test_routes_agree_for_complex_multiplier_order(self):
        beta = 2 / 2 + (0.3 + 0.2j) - 1
        series = bessel_j(beta, 30.0, BesselRoute.SERIES)
        asymptotic = bessel_j(beta, 30.0, "asymptotic")
        assert _rel(asymptotic, series) < 1e-8

    def test_scalar_in_scalar_out(self):
        assert isinstance(bessel_j(0, 3.0), complex)

    def test_array_in_array_out(self):
        values = bessel_j(0, np.array([0.0, 5.0, 40.0]))
        assert isinstance(values, np.ndarray)
        assert values.shape == (3,)
        assert np.allclose(values.real, sp.jv(0, [0.0, 5.0, 40.0]), atol=1e-12)

    def test_unknown_route(self):
        with pytest.raises(ValueError):
            bessel_j(0, 1.0, "fastest")


# ------------------------------------------------------------------
# Identities across bands of r
# ------------------------------------------------------------------

class TestBesselIdentities:
    @pytest.mark.parametrize("beta", [0, 0.5, 1, 1.3 + 0.2j, 2.5 + 1j])
    def test_routes_agree_on_overlap_band(self, beta):
        r = np.linspace(10.0, 40.0, 16)
        series = bessel_j_series(beta, r)
        asymptotic = bessel_j_asymptotic(beta, r)
        rel = np.abs(asymptotic - series) / np.abs(series)
        assert rel.max() < 1e-8, r[rel.argmax()]

    @pytest.mark.parametrize("beta", [0.5, 1.3 + 0.2j, 2.5 + 1j, -1.5 + 0.7j, 4.0 - 0.5j])
    def test_three_term_recurrence(self, beta):
        r = np.linspace(1.0, 40.0, 40)
        j = bessel_j(beta, r)
        defect = bessel_j(beta - 1, r) + bessel_j(beta + 1, r) - (2 * beta / r) * j
        assert np.all(np.abs(defect) < 1e-8 * (1 + np.abs(j)))

    def test_half_order_closed_form_band(self):
        r = np.linspace(0.1, 40.0, 400)
        expected = np.sqrt(2 / (np.pi * r)) * np.sin(r)
        assert np.max(np.abs(bessel_j(0.5, r) - expected)) < 1e-10

    @pytest.mark.parametrize("beta", [0, 1.0, 0.3 + 0.2j])
    def test_two_wave_remainder_decays(self, beta):
        r = np.linspace(10.0, 200.0, 191)
        scaled = np.abs(bessel_j(beta, r) - leading_two_wave(beta, r)) * r ** 1.5
        (b1, d1), (b2, d2) = asymptotic_coeffs(beta, num_terms=2).correction_terms
        assert np.all(scaled <= abs(b1) + abs(d1) + 2 * (abs(b2) + abs(d2)) / r)
