"""Results produced by the numerical layers."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from smlab.errors import DomainError
from .grids import RadialGrid
from .specs import MeansSpec


def _complex_dict(value: complex) -> dict:
    return {"re": value.real, "im": value.imag}


@dataclass(frozen=True)
class AsymptoticCoeffs:
    """Coefficients of the two-wave expansion of J_beta(r) for large r.

    ``correction_terms[k-1]`` holds the coefficients multiplying r^{-k} in
    the e^{ir} and e^{-ir} brackets respectively.
    """
    b0: complex
    d0: complex
    correction_terms: list[tuple[complex, complex]] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.b0 == 0 or self.d0 == 0:
            raise DomainError("leading coefficients b0, d0 must be nonzero")

    def to_dict(self) -> dict:
        return {
            "b0": _complex_dict(self.b0),
            "d0": _complex_dict(self.d0),
            "correction_terms": [
                [_complex_dict(b), _complex_dict(d)] for b, d in self.correction_terms
            ],
        }


@dataclass
class RadialProfile:
    """Samples of a radial function on a :class:`RadialGrid`."""
    grid: RadialGrid
    values: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != self.grid.radii.shape:
            raise DomainError("profile values must match the grid")

    @property
    def radii(self) -> np.ndarray:
        return self.grid.radii

    @property
    def magnitudes(self) -> np.ndarray:
        return np.abs(self.values)

    def argmax_radius(self) -> float:
        """Radius where |values| peaks."""
        return float(self.radii[int(np.argmax(self.magnitudes))])

    def scaled(self, factor: complex) -> RadialProfile:
        return RadialProfile(self.grid, self.values * factor, self.label)

    def rows(self) -> list[tuple[float, float, float, float]]:
        """(radius, re, im, abs) per sample."""
        return [
            (float(r), float(v.real), float(v.imag), float(abs(v)))
            for r, v in zip(self.radii, self.values)
        ]


@dataclass(frozen=True)
class MeansEvaluation:
    """One value of A_t^alpha f_lambda at a radius |x|."""
    spec: MeansSpec
    t: float
    lam: float
    radius: float
    value: complex

    def __post_init__(self) -> None:
        if self.t <= 0:
            raise DomainError(f"t must be positive, got {self.t}")
        if not (math.isfinite(self.value.real) and math.isfinite(self.value.imag)):
            raise DomainError(f"non-finite mean value {self.value!r}")

    def row(self) -> tuple:
        """CSV row: n, re_alpha, im_alpha, t, lambda, radius, re, im, abs."""
        return (
            self.spec.n, self.spec.re_alpha, self.spec.im_alpha, self.t, self.lam,
            self.radius, self.value.real, self.value.imag, abs(self.value),
        )

    def to_dict(self) -> dict:
        return {
            **self.spec.to_dict(),
            "t": self.t,
            "lambda": self.lam,
            "radius": self.radius,
            "value": _complex_dict(self.value),
        }


class ScalingQuantity(enum.Enum):
    """Quantities whose growth in lambda is measured."""
    TESTFN_LP_NORM = "TESTFN_LP_NORM"
    MEAN_AT_ORIGIN = "MEAN_AT_ORIGIN"
    MEAN_TUNED_FAR = "MEAN_TUNED_FAR"
    MEAN_LP_NEAR_ORIGIN = "MEAN_LP_NEAR_ORIGIN"

    @property
    def needs_p(self) -> bool:
        return self in (ScalingQuantity.TESTFN_LP_NORM, ScalingQuantity.MEAN_LP_NEAR_ORIGIN)


@dataclass
class ScalingFit:
    """Least-squares fit of log(value) against log(lambda)."""
    quantity: ScalingQuantity
    spec: MeansSpec
    p: float | None
    lambdas: list[float]
    values: list[float]
    slope: float
    intercept: float
    r_squared: float
    residuals: list[float] = field(default_factory=list)
    predicted: float | None = None

    def __post_init__(self) -> None:
        if len(self.lambdas) < 2 or len(self.lambdas) != len(self.values):
            raise DomainError("a fit needs >= 2 (lambda, value) pairs")
        if any(b <= a for a, b in zip(self.lambdas, self.lambdas[1:])):
            raise DomainError("lambdas must be strictly increasing")
        if any(v <= 0 for v in self.values):
            raise DomainError("fitted values must be positive")
        if not 0.0 <= self.r_squared <= 1.0:
            raise DomainError(f"r_squared must lie in [0, 1], got {self.r_squared}")

    @property
    def delta(self) -> float | None:
        """Fitted minus predicted slope."""
        if self.predicted is None:
            return None
        return self.slope - self.predicted

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity.value,
            "n": self.spec.n,
            "alpha_re": self.spec.re_alpha,
            "alpha_im": self.spec.im_alpha,
            "p": self.p,
            "lambdas": list(self.lambdas),
            "values": list(self.values),
            "slope": self.slope,
            "intercept": self.intercept,
            "predicted": self.predicted,
            "delta": self.delta,
            "r_squared": self.r_squared,
        }


class Verdict(enum.Enum):
    """Where a point (p, Re alpha) sits relative to the recorded literature."""
    SUFFICIENT_KNOWN = "SUFFICIENT_KNOWN"
    NECESSARY_VIOLATED = "NECESSARY_VIOLATED"
    OPEN = "OPEN"


@dataclass(frozen=True)
class RegionVerdict:
    """Classification of (n, p, Re alpha) with the condition that decided it."""
    n: int
    p: float
    re_alpha: float
    verdict: Verdict
    triggering_condition: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "re_alpha": self.re_alpha,
            "verdict": self.verdict.value,
            "triggering_condition": self.triggering_condition,
        }


@dataclass(frozen=True)
class DecayRow:
    s: float
    magnitude: float
    normalized: float


@dataclass
class DecayTable:
    """|m^alpha(s)| against its predicted decay s^{-(n-1)/2 - Re alpha}."""
    spec: MeansSpec
    rows: list[DecayRow]

    @property
    def median(self) -> float:
        return float(np.median([row.normalized for row in self.rows]))

    @property
    def flagged(self) -> list[DecayRow]:
        """Rows whose normalized product exceeds twice the median."""
        limit = 2.0 * self.median
        return [row for row in self.rows if row.normalized > limit]

    @property
    def bounded(self) -> bool:
        return not self.flagged


@dataclass(frozen=True)
class EnvelopeRatios:
    """Measured size of f_lambda in each spatial regime.

    ``origin_max`` is the raw maximum of |f| on |x| <= 1/lambda; the other two
    are maxima of |f| divided by the regime's envelope.
    """
    lam: float
    origin_max: float | None
    off_sphere_ratio: float | None
    near_sphere_ratio: float | None

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "origin_max": self.origin_max,
            "off_sphere_ratio": self.off_sphere_ratio,
            "near_sphere_ratio": self.near_sphere_ratio,
        }


@dataclass(frozen=True)
class MeanComponents:
    """A mean value split into phase components plus a remainder."""
    total: complex
    parts: dict[str, complex]
    stationary: str | None = None

    def ratio(self, name: str, reference: str) -> float:
        return abs(self.parts[name]) / abs(self.parts[reference])

    def to_dict(self) -> dict:
        return {
            "total": _complex_dict(self.total),
            "parts": {k: _complex_dict(v) for k, v in self.parts.items()},
            "stationary": self.stationary,
        }


@dataclass(frozen=True)
class WindowConvergence:
    """Slopes over the two largest fit windows and their distance to the prediction."""
    lower_slope: float
    upper_slope: float
    predicted: float

    @property
    def lower_distance(self) -> float:
        return abs(self.lower_slope - self.predicted)

    @property
    def upper_distance(self) -> float:
        return abs(self.upper_slope - self.predicted)

    @property
    def converging(self) -> bool:
        return self.upper_distance <= self.lower_distance


@dataclass(frozen=True)
class ImAlphaInvariance:
    """Slopes for alpha and alpha + i*shift of the same quantity."""
    slope: float
    shifted_slope: float
    shift: float = 1.0

    @property
    def difference(self) -> float:
        return abs(self.shifted_slope - self.slope)


@dataclass
class NecessityReport:
    """Necessary lower bounds on Re alpha implied by fitted slopes."""
    spec: MeansSpec
    p: float
    testfn_fit: ScalingFit
    near_origin_fit: ScalingFit
    tuned_far_fit: ScalingFit
    implied_origin_bound: float
    implied_far_bound: float
    exact_origin_bound: float
    exact_far_bound: float

    @property
    def origin_slack(self) -> float:
        return abs(self.implied_origin_bound - self.exact_origin_bound)

    @property
    def far_slack(self) -> float:
        return abs(self.implied_far_bound - self.exact_far_bound)

    @property
    def necessary_threshold(self) -> float:
        return max(self.exact_origin_bound, self.exact_far_bound)

    @property
    def violated(self) -> bool:
        """True when Re alpha lies below a necessary bound."""
        return self.spec.re_alpha < self.necessary_threshold - 1e-12

    @property
    def status(self) -> str:
        return "necessary condition violated" if self.violated else "necessary conditions hold"

    def to_dict(self) -> dict:
        return {
            **self.spec.to_dict(),
            "p": self.p,
            "fits": [
                self.testfn_fit.to_dict(),
                self.near_origin_fit.to_dict(),
                self.tuned_far_fit.to_dict(),
            ],
            "implied_origin_bound": self.implied_origin_bound,
            "implied_far_bound": self.implied_far_bound,
            "exact_origin_bound": self.exact_origin_bound,
            "exact_far_bound": self.exact_far_bound,
            "origin_slack": self.origin_slack,
            "far_slack": self.far_slack,
            "status": self.status,
        }


@dataclass(frozen=True)
class BoundaryRow:
    """One p of the exponent atlas."""
    n: int
    p: float
    necessary_threshold: float | None
    sufficient_threshold: float
    sufficient_condition: str
    verdict_below: Verdict
    verdict_above: Verdict

    @property
    def inv_p(self) -> float:
        return 1.0 / self.p

    @property
    def gap(self) -> float | None:
        if self.necessary_threshold is None:
            return None
        return self.sufficient_threshold - self.necessary_threshold
