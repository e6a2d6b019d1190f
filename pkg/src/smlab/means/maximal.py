"""Discrete maximal scan over a grid of dilations t."""

from __future__ import annotations

import logging

from smlab.errors import DomainError
from smlab.models.results import MeansEvaluation
from smlab.models.specs import MeansSpec, QuadratureSpec, TestFunctionSpec
from smlab.utils.batching import run_ordered
from .multiplier_route import evaluate_mean

log = logging.getLogger(__name__)


def scan_means(
    spec: MeansSpec,
    tf: TestFunctionSpec,
    radius: float,
    t_grid: list[float],
    quad: QuadratureSpec,
    *,
    threads: int = 1,
) -> list[MeansEvaluation]:
    """A_t^alpha f_lambda(x) for every t in *t_grid*, in grid order."""
    if not t_grid:
        raise DomainError("t_grid must be nonempty")
    return run_ordered(
        lambda t: evaluate_mean(spec, t, tf, radius, quad),
        list(t_grid),
        threads=threads,
        description="t scan",
    )


def maximal_scan(
    spec: MeansSpec,
    tf: TestFunctionSpec,
    radius: float,
    t_grid: list[float],
    quad: QuadratureSpec,
    *,
    threads: int = 1,
) -> float:
    """max over t in *t_grid* of |A_t^alpha f_lambda(x)|."""
    evaluations = scan_means(spec, tf, radius, t_grid, quad, threads=threads)
    best = max(evaluations, key=lambda e: abs(e.value))
    log.info("maximal scan at |x|=%g: max %.6g at t=%g", radius, abs(best.value), best.t)
    return abs(best.value)
