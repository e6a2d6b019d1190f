"""Necessary conditions on Re alpha recovered from fitted growth exponents.

The measured exponents enter two comparisons, each against the growth of
||f_lambda||_p:

* near the origin, ||A_1 f_lambda||_p grows like lambda^{K1 - Re alpha};
  boundedness forces Re alpha >= K1 - slope(f_lambda), i.e. (1-n)/p;
* at the tuned dilation t = |x| + 1, |A_t f_lambda(x)| grows like
  lambda^{K2 - Re alpha}; boundedness forces Re alpha >= K2 - slope(f_lambda),
  i.e. (1-n)/2 + 1/p.

K1 and K2 are read off the fits, so the bounds are measured, not assumed.
"""

from __future__ import annotations

import logging

from smlab.errors import DomainError
from smlab.models.results import NecessityReport, ScalingFit, ScalingQuantity
from smlab.models.specs import MeansSpec, QuadratureSpec
from .scaling import run_scaling

log = logging.getLogger(__name__)


def exact_bounds(n: int, p: float) -> tuple[float, float]:
    """(1-n)/p and (1-n)/2 + 1/p."""
    return (1 - n) / p, (1 - n) / 2 + 1 / p


def assemble_report(
    spec: MeansSpec,
    p: float,
    testfn_fit: ScalingFit,
    near_origin_fit: ScalingFit,
    tuned_far_fit: ScalingFit,
) -> NecessityReport:
    """Combine three fits into implied lower bounds on Re alpha."""
    if p < 2:
        raise DomainError(f"the necessary conditions need p >= 2, got {p}")
    expected = (
        (testfn_fit, ScalingQuantity.TESTFN_LP_NORM),
        (near_origin_fit, ScalingQuantity.MEAN_LP_NEAR_ORIGIN),
        (tuned_far_fit, ScalingQuantity.MEAN_TUNED_FAR),
    )
    for fit, quantity in expected:
        if fit.quantity is not quantity:
            raise DomainError(f"expected a {quantity.value} fit, got {fit.quantity.value}")

    k1 = near_origin_fit.slope + near_origin_fit.spec.re_alpha
    k2 = tuned_far_fit.slope + tuned_far_fit.spec.re_alpha
    origin_bound, far_bound = exact_bounds(spec.n, p)
    report = NecessityReport(
        spec=spec,
        p=p,
        testfn_fit=testfn_fit,
        near_origin_fit=near_origin_fit,
        tuned_far_fit=tuned_far_fit,
        implied_origin_bound=k1 - testfn_fit.slope,
        implied_far_bound=k2 - testfn_fit.slope,
        exact_origin_bound=origin_bound,
        exact_far_bound=far_bound,
    )
    log.info("Necessity n=%d p=%g: implied Re alpha >= %.4f (origin), >= %.4f (far); %s",
             spec.n, p, report.implied_origin_bound, report.implied_far_bound, report.status)
    return report


def necessity_report(
    spec: MeansSpec,
    p: float,
    lambdas: list[float],
    quad: QuadratureSpec,
    **kwargs,
) -> NecessityReport:
    """Run the three sweeps and assemble the implied bounds."""
    if p < 2:
        raise DomainError(f"the necessary conditions need p >= 2, got {p}")
    testfn_fit = run_scaling(ScalingQuantity.TESTFN_LP_NORM, spec, p, lambdas, quad, **kwargs)
    near_fit = run_scaling(ScalingQuantity.MEAN_LP_NEAR_ORIGIN, spec, p, lambdas, quad, **kwargs)
    far_fit = run_scaling(ScalingQuantity.MEAN_TUNED_FAR, spec, None, lambdas, quad, **kwargs)
    return assemble_report(spec, p, testfn_fit, near_fit, far_fit)
