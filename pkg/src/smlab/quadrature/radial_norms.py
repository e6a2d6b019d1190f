"""L^p norms of radial functions sampled on a :class:`RadialGrid`."""

from __future__ import annotations

import math

import numpy as np

from smlab.errors import DomainError
from smlab.fourier.radial import sphere_area
from smlab.models.results import RadialProfile


def lp_norm_radial(profile: RadialProfile, p: float, n: int) -> float:
    """(omega_{n-1} int |f(rho)|^p rho^{n-1} d rho)^{1/p} with the grid's own weights."""
    if not math.isfinite(p) or p < 1:
        raise DomainError(f"p must be a finite real >= 1, got {p}")
    grid = profile.grid
    if not grid.size:
        raise DomainError("cannot take a norm over an empty grid")
    integrand = profile.magnitudes ** p * grid.radii ** (n - 1)
    return float((sphere_area(n) * np.dot(grid.weights, integrand)) ** (1.0 / p))
