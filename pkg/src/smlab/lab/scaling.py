"""Lambda sweeps and log-log growth fits."""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy import stats

from smlab.errors import DomainError, FitRejectedError
from smlab.means.multiplier_route import mean_multiplier_route
from smlab.means.near_origin import DEFAULT_C0, near_origin_lp_norm
from smlab.models.config import LAMBDA_MAX, LAMBDA_MIN
from smlab.models.results import ImAlphaInvariance, ScalingFit, ScalingQuantity, WindowConvergence
from smlab.models.specs import MeansSpec, QuadratureSpec, TestFunctionSpec
from smlab.testfn.f_lambda import f_lambda_lp_norm
from smlab.utils.batching import run_ordered

log = logging.getLogger(__name__)

MIN_R_SQUARED = 0.99
DEFAULT_FAR_RADIUS = 2.0


def _require_p(quantity: ScalingQuantity, p: float | None) -> float | None:
    if quantity.needs_p:
        if p is None:
            raise DomainError(f"{quantity.value} needs an exponent p")
        if not (math.isfinite(p) and p >= 1):
            raise DomainError(f"p must be >= 1, got {p}")
    return p


def predicted_exponent(quantity: ScalingQuantity, spec: MeansSpec, p: float | None = None) -> float:
    """Growth exponent in lambda of *quantity*."""
    quantity = ScalingQuantity(quantity)
    p = _require_p(quantity, p)
    n, a = spec.n, spec.re_alpha
    if quantity is ScalingQuantity.TESTFN_LP_NORM:
        return (n + 1) / 2 - 1 / p
    if quantity is ScalingQuantity.MEAN_AT_ORIGIN:
        return (n + 1) / 2 - a
    if quantity is ScalingQuantity.MEAN_TUNED_FAR:
        return 1 - a
    return (n + 1) / 2 - a - n / p


def measure(
    quantity: ScalingQuantity,
    spec: MeansSpec,
    p: float | None,
    lam: float,
    quad: QuadratureSpec,
    *,
    radius: float = DEFAULT_FAR_RADIUS,
    t: float | None = None,
    c0: float = DEFAULT_C0,
    threads: int = 1,
) -> float:
    """The positive value of *quantity* at one lambda.

    MEAN_TUNED_FAR is |A_t f_lambda(x)| at |x| = *radius* with t = |x| + 1
    unless *t* is given.
    """
    quantity = ScalingQuantity(quantity)
    p = _require_p(quantity, p)
    tf = TestFunctionSpec(spec, lam)
    if quantity is ScalingQuantity.TESTFN_LP_NORM:
        return f_lambda_lp_norm(tf, p, quad, threads=threads)
    if quantity is ScalingQuantity.MEAN_AT_ORIGIN:
        return abs(mean_multiplier_route(spec, 1.0, tf, 0.0, quad))
    if quantity is ScalingQuantity.MEAN_TUNED_FAR:
        tuned = radius + 1.0 if t is None else t
        return abs(mean_multiplier_route(spec, tuned, tf, radius, quad))
    return near_origin_lp_norm(spec, tf, p, c0, quad)


def fit_power_law(lambdas: list[float], values: list[float]) -> tuple[float, float, float, list[float]]:
    """Least squares of log(value) on log(lambda): slope, intercept, r^2, residuals."""
    x = np.log(np.asarray(lambdas, dtype=float))
    y = np.log(np.asarray(values, dtype=float))
    result = stats.linregress(x, y)
    residuals = y - (result.intercept + result.slope * x)
    r_squared = min(1.0, float(result.rvalue) ** 2)
    return float(result.slope), float(result.intercept), r_squared, residuals.tolist()


def _check_lambdas(lambdas: list[float]) -> list[float]:
    lambdas = [float(v) for v in lambdas]
    if len(lambdas) < 2:
        raise DomainError("a lambda sweep needs at least 2 points")
    if any(b <= a for a, b in zip(lambdas, lambdas[1:])):
        raise DomainError("lambdas must be strictly increasing")
    if lambdas[0] < LAMBDA_MIN or lambdas[-1] > LAMBDA_MAX:
        raise DomainError(f"lambdas must lie in [{LAMBDA_MIN:g}, {LAMBDA_MAX:g}]")
    return lambdas


def run_scaling(
    quantity: ScalingQuantity,
    spec: MeansSpec,
    p: float | None,
    lambdas: list[float],
    quad: QuadratureSpec,
    *,
    radius: float = DEFAULT_FAR_RADIUS,
    t: float | None = None,
    c0: float = DEFAULT_C0,
    threads: int = 1,
    show_progress: bool = False,
    min_r_squared: float = MIN_R_SQUARED,
) -> ScalingFit:
    """Measure *quantity* at every lambda and fit its growth exponent.

    Raises :class:`FitRejectedError` when r^2 < *min_r_squared*.
    """
    quantity = ScalingQuantity(quantity)
    p = _require_p(quantity, p)
    lambdas = _check_lambdas(lambdas)
    predicted = predicted_exponent(quantity, spec, p)

    log.info("Sweep %s: n=%d alpha=%s p=%s over %d lambdas (predicted slope %.4f)",
             quantity.value, spec.n, spec.alpha, p, len(lambdas), predicted)
    values = run_ordered(
        lambda lam: measure(quantity, spec, p, lam, quad, radius=radius, t=t, c0=c0),
        lambdas,
        threads=threads,
        show_progress=show_progress,
        description=f"{quantity.value} sweep",
    )
    for lam, value in zip(lambdas, values):
        log.debug("%s lambda=%g -> %.17g", quantity.value, lam, value)

    slope, intercept, r_squared, residuals = fit_power_law(lambdas, values)
    if r_squared < min_r_squared:
        raise FitRejectedError(
            f"{quantity.value} fit rejected: r^2 = {r_squared:.6f} < {min_r_squared}", r_squared,
        )
    fit = ScalingFit(
        quantity=quantity, spec=spec, p=p, lambdas=lambdas, values=[float(v) for v in values],
        slope=slope, intercept=intercept, r_squared=r_squared, residuals=residuals,
        predicted=predicted,
    )
    log.info("Done %s: slope %.4f vs predicted %.4f (r^2 %.6f)",
             quantity.value, slope, predicted, r_squared)
    return fit


def window_convergence(fit: ScalingFit) -> WindowConvergence:
    """Slopes over the lower and upper windows of len(lambdas) - 1 points."""
    if len(fit.lambdas) < 3:
        raise DomainError("window convergence needs at least 3 lambdas")
    if fit.predicted is None:
        raise DomainError("window convergence needs a predicted slope")
    lower = fit_power_law(fit.lambdas[:-1], fit.values[:-1])[0]
    upper = fit_power_law(fit.lambdas[1:], fit.values[1:])[0]
    return WindowConvergence(lower, upper, fit.predicted)


def im_alpha_invariance(
    quantity: ScalingQuantity,
    spec: MeansSpec,
    p: float | None,
    lambdas: list[float],
    quad: QuadratureSpec,
    *,
    shift: float = 1.0,
    **kwargs,
) -> ImAlphaInvariance:
    """Fitted slopes for alpha and alpha + i*shift."""
    base = run_scaling(quantity, spec, p, lambdas, quad, **kwargs)
    moved = run_scaling(quantity, spec.shifted(1j * shift), p, lambdas, quad, **kwargs)
    return ImAlphaInvariance(base.slope, moved.slope, shift)
