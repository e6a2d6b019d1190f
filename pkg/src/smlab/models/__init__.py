"""Data models for smlab."""

from .specs import BesselOrder, MeansSpec, QuadratureSpec, BumpSpec, TestFunctionSpec
from .grids import RadialGrid
from .results import (
    AsymptoticCoeffs,
    RadialProfile,
    MeansEvaluation,
    ScalingQuantity,
    ScalingFit,
    Verdict,
    RegionVerdict,
    DecayRow,
    DecayTable,
    EnvelopeRatios,
    MeanComponents,
    WindowConvergence,
    ImAlphaInvariance,
    NecessityReport,
    BoundaryRow,
)
from .config import RunConfig, QuadratureConfig, Preset

__all__ = [
    "BesselOrder", "MeansSpec", "QuadratureSpec", "BumpSpec", "TestFunctionSpec",
    "RadialGrid",
    "AsymptoticCoeffs", "RadialProfile", "MeansEvaluation",
    "ScalingQuantity", "ScalingFit", "Verdict", "RegionVerdict",
    "DecayRow", "DecayTable", "EnvelopeRatios", "MeanComponents",
    "WindowConvergence", "ImAlphaInvariance", "NecessityReport", "BoundaryRow",
    "RunConfig", "QuadratureConfig", "Preset",
]
