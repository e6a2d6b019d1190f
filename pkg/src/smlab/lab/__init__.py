"""Scaling experiments: lambda sweeps, exponent fits and necessity reports."""

from .scaling import (
    fit_power_law,
    im_alpha_invariance,
    measure,
    predicted_exponent,
    run_scaling,
    window_convergence,
)
from .necessity import assemble_report, exact_bounds, necessity_report

__all__ = [
    "fit_power_law", "im_alpha_invariance", "measure", "predicted_exponent",
    "run_scaling", "window_convergence",
    "assemble_report", "exact_bounds", "necessity_report",
]
