"""L^p size of A_1^alpha f_lambda on the small ball |x| <= c0 / lambda."""

from __future__ import annotations

import math

from smlab.errors import DomainError
from smlab.models.grids import RadialGrid
from smlab.models.results import RadialProfile
from smlab.models.specs import MeansSpec, QuadratureSpec, TestFunctionSpec
from smlab.quadrature.radial_norms import lp_norm_radial
from .multiplier_route import mean_multiplier_route_batch

DEFAULT_C0 = 0.05
BALL_NODES = 16


def near_origin_lp_norm(
    spec: MeansSpec, tf: TestFunctionSpec, p: float, c0: float, quad: QuadratureSpec,
) -> float:
    """||A_1^alpha f_lambda||_{L^p(|x| <= c0/lambda)}."""
    if not (math.isfinite(p) and p >= 1):
        raise DomainError(f"p must be >= 1, got {p}")
    if not c0 > 0:
        raise DomainError(f"c0 must be positive, got {c0}")
    grid = RadialGrid.from_panels([0.0, c0 / tf.lam], BALL_NODES)
    values = mean_multiplier_route_batch(spec, 1.0, tf, grid.radii, quad)
    return lp_norm_radial(RadialProfile(grid, values, "A_1 f_lambda near origin"), p, spec.n)
