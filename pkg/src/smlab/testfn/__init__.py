"""The cutoff chi and the test functions f_lambda."""

from .bump import chi, smooth_step
from .f_lambda import (
    envelope_ratios,
    f_lambda,
    f_lambda_batch,
    f_lambda_lp_norm,
    f_lambda_profile,
    profile_grid,
    truncation_radius,
)

__all__ = [
    "chi", "smooth_step", "envelope_ratios", "f_lambda", "f_lambda_batch",
    "f_lambda_lp_norm", "f_lambda_profile", "profile_grid", "truncation_radius",
]
