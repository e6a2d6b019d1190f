"""Oscillatory quadrature and radial L^p norms."""

from .oscillatory import gauss_panels, integrate_oscillatory
from .radial_norms import lp_norm_radial

__all__ = ["gauss_panels", "integrate_oscillatory", "lp_norm_radial"]
