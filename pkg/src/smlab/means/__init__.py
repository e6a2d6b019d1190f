"""Generalized spherical means A_t^alpha: multiplier route, ball oracle, decompositions."""

from .multiplier_route import (
    mean_multiplier_route,
    mean_multiplier_route_batch,
    mean_gaussian_multiplier_route,
    evaluate_mean,
    gaussian,
)
from .direct_oracle import mean_direct_oracle
from .components import origin_components, tuned_components
from .maximal import maximal_scan, scan_means
from .near_origin import near_origin_lp_norm

__all__ = [
    "mean_multiplier_route", "mean_multiplier_route_batch", "mean_gaussian_multiplier_route",
    "evaluate_mean", "gaussian", "mean_direct_oracle",
    "origin_components", "tuned_components",
    "maximal_scan", "scan_means", "near_origin_lp_norm",
]
