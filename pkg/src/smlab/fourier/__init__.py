"""Radial Fourier profiles: sphere measure and the means multiplier."""

from .radial import (
    S_MIN,
    multiplier_at_origin,
    multiplier_decay_check,
    multiplier_m,
    sphere_area,
    sphere_fourier,
    sphere_fourier_direct,
)

__all__ = [
    "S_MIN", "multiplier_at_origin", "multiplier_decay_check", "multiplier_m",
    "sphere_area", "sphere_fourier", "sphere_fourier_direct",
]
