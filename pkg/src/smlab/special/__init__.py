"""Gamma and Bessel functions of complex argument and order."""

from .gamma import gamma_complex, reciprocal_gamma, POLE_TOLERANCE
from .bessel import (
    BesselRoute,
    asymptotic_coeffs,
    bessel_j,
    bessel_j_asymptotic,
    bessel_j_scaled,
    bessel_j_series,
    crossover_radius,
    leading_two_wave,
)

__all__ = [
    "gamma_complex", "reciprocal_gamma", "POLE_TOLERANCE",
    "BesselRoute", "asymptotic_coeffs", "bessel_j", "bessel_j_asymptotic",
    "bessel_j_scaled", "bessel_j_series", "crossover_radius", "leading_two_wave",
]
