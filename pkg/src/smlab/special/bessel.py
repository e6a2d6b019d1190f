"""Bessel functions J_beta of complex order.

Two routes:

* the power series  J_beta(r) = sum_j (-1)^j (r/2)^{2j+beta} / (j! Gamma(j+beta+1)),
  accumulated in double precision up to ``SERIES_RADIUS`` and with mpmath
  guard digits beyond it;
* the Hankel two-wave expansion
  J_beta(r) = r^{-1/2} e^{ir} [b0 + E1(r)] + r^{-1/2} e^{-ir} [d0 + E2(r)],
  truncated optimally.

:func:`bessel_j` dispatches between them at ``crossover_radius(beta)``.
Every entry point accepts a scalar or a numpy array of radii; scalars give a
complex scalar back, arrays a complex ndarray.  Complex powers use the
principal branch.
"""

from __future__ import annotations

import cmath
import enum
import logging
import math

import mpmath
import numpy as np

from smlab.errors import ConvergenceError, DomainError
from smlab.models.results import AsymptoticCoeffs
from .gamma import reciprocal_gamma

log = logging.getLogger(__name__)

SERIES_TOLERANCE = 1e-16
SERIES_RADIUS = 12.0
DEFAULT_MAX_TERMS = 500
DEFAULT_CORRECTION_TERMS = 40
ASYMPTOTIC_FLOOR = 1e-17
_GUARD_DIGITS = 20
_INV_SQRT_TWO_PI = 1.0 / math.sqrt(2.0 * math.pi)


class BesselRoute(enum.Enum):
    """Evaluation route for :func:`bessel_j`."""
    AUTO = "auto"
    SERIES = "series"
    ASYMPTOTIC = "asymptotic"


def _order(beta: complex) -> complex:
    beta = complex(beta)
    if not (math.isfinite(beta.real) and math.isfinite(beta.imag)):
        raise DomainError(f"Bessel order must be finite, got {beta!r}")
    return beta


def _radii(r) -> tuple[np.ndarray, bool]:
    scalar = np.ndim(r) == 0
    arr = np.atleast_1d(np.asarray(r, dtype=float))
    if not np.all(np.isfinite(arr)):
        raise DomainError("Bessel argument must be finite")
    if np.any(arr < 0):
        raise DomainError(f"Bessel argument must be >= 0, got min {arr.min()!r}")
    return arr, scalar


def _out(values: np.ndarray, scalar: bool):
    return complex(values[0]) if scalar else values


def _negative_integer(beta: complex) -> int | None:
    """m if beta == -m for an integer m >= 1."""
    if beta.imag == 0 and beta.real < 0 and beta.real == round(beta.real):
        return int(-beta.real)
    return None


def crossover_radius(beta: complex) -> float:
    """Radius above which :func:`bessel_j` uses the asymptotic route."""
    return max(SERIES_RADIUS, abs(complex(beta)) ** 2)


def asymptotic_min_radius(beta: complex) -> float:
    """Smallest radius accepted by :func:`bessel_j_asymptotic`."""
    return max(1.0, abs(complex(beta)))


# ---------------------------------------------------------------------------
# Series route
# ---------------------------------------------------------------------------

def _series_ratio_double(beta: complex, x: np.ndarray, max_terms: int) -> np.ndarray:
    """sum_j (-x)^j / (j! (beta+1)_j) in double precision, x = (r/2)^2."""
    term = np.ones(x.shape, dtype=complex)
    total = term.copy()
    done = x == 0
    for j in range(1, max_terms):
        if done.all():
            return total
        term = term * (-x) / (j * (j + beta))
        total = np.where(done, total, total + term)
        done |= np.abs(term) <= SERIES_TOLERANCE * np.abs(total)
    if not done.all():
        raise ConvergenceError(
            f"Bessel series did not converge in {max_terms} terms "
            f"(r up to {2 * math.sqrt(x.max()):.6g})"
        )
    return total


def _series_ratio_mp(beta: complex, x: float, max_terms: int) -> complex:
    """Same sum with enough guard digits to absorb the cancellation at large r."""
    r = 2.0 * math.sqrt(x)
    with mpmath.workdps(_GUARD_DIGITS + math.ceil(r / math.log(10))):
        b = mpmath.mpc(beta.real, beta.imag)
        minus_x = -mpmath.mpf(x)
        term = mpmath.mpc(1)
        total = mpmath.mpc(1)
        for j in range(1, max_terms):
            term *= minus_x / (j * (j + b))
            total += term
            if abs(term) <= SERIES_TOLERANCE * abs(total):
                return complex(total)
    raise ConvergenceError(f"Bessel series did not converge in {max_terms} terms at r={r:.6g}")


def _series_ratio(beta: complex, r: np.ndarray, max_terms: int) -> np.ndarray:
    x = (0.5 * r) ** 2
    out = np.empty(r.shape, dtype=complex)
    small = r <= SERIES_RADIUS
    if small.any():
        out[small] = _series_ratio_double(beta, x[small], max_terms)
    for idx in np.flatnonzero(~small):
        out[idx] = _series_ratio_mp(beta, float(x[idx]), max_terms)
    return out


def bessel_j_scaled(beta: complex, r, max_terms: int = DEFAULT_MAX_TERMS):
    """Lambda_beta(r) = (r/2)^{-beta} J_beta(r), an entire function of r.

    Lambda_beta(0) = 1/Gamma(beta+1).
    """
    beta = _order(beta)
    arr, scalar = _radii(r)
    m = _negative_integer(beta)
    if m is not None:
        # J_{-m} = (-1)^m J_m
        values = (-1) ** m * (0.5 * arr) ** (2 * m) * bessel_j_scaled(float(m), arr, max_terms)
        return _out(values, scalar)
    values = reciprocal_gamma(beta + 1) * _series_ratio(beta, arr, max_terms)
    return _out(values, scalar)


def bessel_j_series(beta: complex, r, max_terms: int = DEFAULT_MAX_TERMS):
    """J_beta(r) from the power series.

    Stops when a term falls below 1e-16 of the running sum; raises
    :class:`ConvergenceError` if *max_terms* is reached first.  At r = 0
    the value is 1 for beta = 0 and 0 for Re beta > 0; other orders with
    Re beta <= 0 have no limit there and raise :class:`DomainError`.
    """
    beta = _order(beta)
    arr, scalar = _radii(r)
    m = _negative_integer(beta)
    if m is not None:
        return _out((-1) ** m * bessel_j_series(float(m), arr, max_terms), scalar)

    at_origin = arr == 0
    if at_origin.any() and beta != 0 and beta.real <= 0:
        raise DomainError(f"J_beta(0) is undefined for beta={beta!r} (Re beta <= 0)")

    values = np.zeros(arr.shape, dtype=complex)
    if beta == 0:
        values[at_origin] = 1.0
    pos = ~at_origin
    if pos.any():
        rp = arr[pos]
        values[pos] = np.exp(beta * np.log(0.5 * rp)) * bessel_j_scaled(beta, rp, max_terms)
    return _out(values, scalar)


# ---------------------------------------------------------------------------
# Asymptotic route
# ---------------------------------------------------------------------------

def _phase(beta: complex) -> complex:
    return beta * math.pi / 2 + math.pi / 4


def asymptotic_coeffs(beta: complex, num_terms: int = 8) -> AsymptoticCoeffs:
    """Leading coefficients and the first *num_terms* correction pairs.

    a_k(beta) = prod_{j<=k} (4 beta^2 - (2j-1)^2) / (k! 8^k); the r^{-k}
    coefficient is b0 i^k a_k in the e^{ir} bracket and d0 (-i)^k a_k in the
    e^{-ir} bracket.
    """
    beta = _order(beta)
    phi = _phase(beta)
    b0 = _INV_SQRT_TWO_PI * cmath.exp(-1j * phi)
    d0 = _INV_SQRT_TWO_PI * cmath.exp(1j * phi)
    mu = 4 * beta * beta
    a = 1 + 0j
    terms = []
    for k in range(1, num_terms + 1):
        a *= (mu - (2 * k - 1) ** 2) / (8 * k)
        terms.append((b0 * (1j ** k) * a, d0 * ((-1j) ** k) * a))
    return AsymptoticCoeffs(b0, d0, terms)


def _hankel_brackets(beta: complex, r: np.ndarray, num_terms: int) -> tuple[np.ndarray, np.ndarray]:
    """P + iQ and P - iQ, summed until the terms stop shrinking."""
    mu = 4 * beta * beta
    c = np.ones(r.shape, dtype=complex)
    plus = np.ones(r.shape, dtype=complex)
    minus = np.ones(r.shape, dtype=complex)
    active = np.ones(r.shape, dtype=bool)
    for k in range(1, num_terms + 1):
        nxt = c * (mu - (2 * k - 1) ** 2) / (8 * k * r)
        active &= np.abs(nxt) <= np.abs(c)
        if not active.any():
            break
        plus = np.where(active, plus + (1j ** k) * nxt, plus)
        minus = np.where(active, minus + ((-1j) ** k) * nxt, minus)
        c = nxt
        active &= np.abs(nxt) >= ASYMPTOTIC_FLOOR
    return plus, minus


def bessel_j_asymptotic(beta: complex, r, num_correction_terms: int = DEFAULT_CORRECTION_TERMS):
    """J_beta(r) from the two-wave expansion with optimal truncation.

    Raises :class:`DomainError` for r below ``asymptotic_min_radius(beta)``.
    """
    beta = _order(beta)
    arr, scalar = _radii(r)
    floor = asymptotic_min_radius(beta)
    if np.any(arr < floor):
        raise DomainError(
            f"asymptotic route needs r >= {floor:.6g} for beta={beta!r}, got {arr.min():.6g}"
        )
    phi = _phase(beta)
    b0 = _INV_SQRT_TWO_PI * cmath.exp(-1j * phi)
    d0 = _INV_SQRT_TWO_PI * cmath.exp(1j * phi)
    plus, minus = _hankel_brackets(beta, arr, num_correction_terms)
    values = (b0 * np.exp(1j * arr) * plus + d0 * np.exp(-1j * arr) * minus) / np.sqrt(arr)
    return _out(values, scalar)


def leading_two_wave(beta: complex, r):
    """r^{-1/2} (b0 e^{ir} + d0 e^{-ir}), the expansion without its error terms."""
    beta = _order(beta)
    arr, scalar = _radii(r)
    if np.any(arr == 0):
        raise DomainError("two-wave form is singular at r = 0")
    coeffs = asymptotic_coeffs(beta, 0)
    values = (coeffs.b0 * np.exp(1j * arr) + coeffs.d0 * np.exp(-1j * arr)) / np.sqrt(arr)
    return _out(values, scalar)


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

def bessel_j(beta: complex, r, route: BesselRoute | str = BesselRoute.AUTO):
    """J_beta(r): series below ``crossover_radius(beta)``, asymptotic at or above it."""
    beta = _order(beta)
    route = BesselRoute(route)
    if route is BesselRoute.SERIES:
        return bessel_j_series(beta, r)
    if route is BesselRoute.ASYMPTOTIC:
        return bessel_j_asymptotic(beta, r)

    arr, scalar = _radii(r)
    cross = crossover_radius(beta)
    values = np.empty(arr.shape, dtype=complex)
    below = arr < cross
    if below.any():
        values[below] = bessel_j_series(beta, arr[below])
    if (~below).any():
        values[~below] = bessel_j_asymptotic(beta, arr[~below])
    return _out(values, scalar)
