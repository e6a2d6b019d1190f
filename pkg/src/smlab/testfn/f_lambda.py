"""The test functions f_lambda and their L^p norms.

f_lambda has Fourier transform e^{-2 pi i |xi|} chi(|xi|/lambda) |xi|^{i Im alpha}.
After the change of variable |xi| = lambda r,

    f_lambda(x) = lambda^{n + i Im alpha} int theta(lambda |x| r) e^{-2 pi i lambda r}
                  chi(r) r^{n-1+i Im alpha} dr,

which concentrates on the unit sphere: |f| ~ lambda^{(n+1)/2} within 1/lambda
of |x| = 1 and decays like lambda (lambda ||x|-1|)^{-N} away from it.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from smlab.errors import DomainError
from smlab.fourier.radial import sphere_area, sphere_fourier
from smlab.models.grids import RadialGrid
from smlab.models.results import EnvelopeRatios, RadialProfile
from smlab.models.specs import QuadratureSpec, TestFunctionSpec
from smlab.quadrature.oscillatory import integrate_oscillatory
from smlab.quadrature.radial_norms import lp_norm_radial
from smlab.utils.batching import chunked, run_ordered
from .bump import chi

log = logging.getLogger(__name__)

# Profile grading, in units of 1/lambda for the dense band.
DENSE_BAND = 20
DENSE_PANELS_PER_UNIT = 2
GEOMETRIC_LIMIT = 0.5
COARSE_PANEL_WIDTH = 0.25
PROFILE_NODES = 16
TAIL_FRACTION = 1e-6
ENVELOPE_ORDER = 4
OFF_SPHERE_DISTANCE = 0.25

BATCH_RADII = 16


def testfn_weight(tf: TestFunctionSpec, r: np.ndarray) -> np.ndarray:
    """e^{-2 pi i lambda r} chi(r) r^{n-1+i Im alpha}: the Fourier side on the r-scale."""
    gamma = tf.means.im_alpha
    return (
        np.exp(-2j * math.pi * tf.lam * r)
        * chi(tf.bump, r)
        * np.exp((tf.n - 1 + 1j * gamma) * np.log(r))
    )


def testfn_prefactor(tf: TestFunctionSpec) -> complex:
    """lambda^{n + i Im alpha}."""
    return complex(np.exp((tf.n + 1j * tf.means.im_alpha) * math.log(tf.lam)))


def _check_radii(radii) -> np.ndarray:
    radii = np.atleast_1d(np.asarray(radii, dtype=float))
    if not np.all(np.isfinite(radii)) or np.any(radii < 0):
        raise DomainError("radius must be finite and >= 0")
    return radii


def f_lambda_batch(tf: TestFunctionSpec, radii, quad: QuadratureSpec) -> np.ndarray:
    """f_lambda at several radii, sharing one set of quadrature nodes."""
    radii = _check_radii(radii)
    lam = tf.lam

    def amplitude(r: np.ndarray) -> np.ndarray:
        arg = lam * np.multiply.outer(radii, r)
        theta = sphere_fourier(tf.n, arg.ravel()).reshape(arg.shape)
        return theta * testfn_weight(tf, r)[None, :]

    freq = 2 * math.pi * lam * (float(radii.max()) + 1.0)
    values = integrate_oscillatory(amplitude, tf.bump.support, freq, quad)
    return testfn_prefactor(tf) * np.asarray(values)


def f_lambda(tf: TestFunctionSpec, radius: float, quad: QuadratureSpec) -> complex:
    """f_lambda at |x| = *radius*."""
    return complex(f_lambda_batch(tf, [radius], quad)[0])


# ---------------------------------------------------------------------------
# Envelopes and truncation
# ---------------------------------------------------------------------------

def envelope_order(n: int, p: float) -> int:
    """Decay order N used for tail estimates; N p > n keeps the tail integrable."""
    return max(ENVELOPE_ORDER, int(math.floor(n / p)) + 1)


def truncation_radius(tf: TestFunctionSpec, p: float) -> float:
    """Smallest R >= 2 whose envelope-estimated L^p tail is below 1e-6 of the norm^p.

    Uses |f| <= lambda (lambda (rho - 1))^{-N} and rho - 1 >= rho / 2 for rho >= 2,
    against the total lambda^{p(n+1)/2 - 1}.
    """
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    n, lam = tf.n, tf.lam
    big_n = envelope_order(n, p)
    k = big_n * p - n
    target = TAIL_FRACTION * lam ** (p * (n + 1) / 2 - 1)
    scale = sphere_area(n) * lam ** (p * (1 - big_n)) * 2.0 ** (big_n * p) / k
    radius = (target / scale) ** (-1.0 / k)
    return max(2.0, float(radius))


def _geometric_edges(start: float, limit: float) -> list[float]:
    """start, start*sqrt2, start*2, ... strictly below *limit*, then *limit*."""
    edges = [start]
    d = start * math.sqrt(2.0)
    while d < limit - 1e-12:
        edges.append(d)
        d *= math.sqrt(2.0)
    edges.append(limit)
    return edges


def _coarse(a: float, b: float) -> RadialGrid | None:
    if b - a <= 1e-12:
        return None
    count = max(1, int(math.ceil((b - a) / COARSE_PANEL_WIDTH)))
    return RadialGrid.from_panels(np.linspace(a, b, count + 1), PROFILE_NODES)


def profile_grid(tf: TestFunctionSpec, p: float = 1.0) -> RadialGrid:
    """Grid graded for f_lambda: dense near the sphere, geometric, then coarse.

    * ||x|-1| <= 20/lambda: panels of width 1/(2 lambda), 16 nodes each;
    * out to ||x|-1| = 1/2: half-octave panels;
    * elsewhere: panels of width 1/4 up to :func:`truncation_radius`.
    """
    lam = tf.lam
    band = DENSE_BAND / lam
    lo, hi = max(0.0, 1.0 - band), 1.0 + band
    dense_count = int(math.ceil((hi - lo) * DENSE_PANELS_PER_UNIT * lam))
    pieces: list[RadialGrid | None] = []

    if lo > 1.0 - GEOMETRIC_LIMIT:
        inward = [1.0 - d for d in reversed(_geometric_edges(band, GEOMETRIC_LIMIT))]
        pieces.append(_coarse(0.0, inward[0]))
        pieces.append(RadialGrid.from_panels(inward, PROFILE_NODES))
    elif lo > 0:
        pieces.append(_coarse(0.0, lo))

    pieces.append(RadialGrid.from_panels(np.linspace(lo, hi, dense_count + 1), PROFILE_NODES))

    outer_start = hi
    if hi < 1.0 + GEOMETRIC_LIMIT:
        outward = [1.0 + d for d in _geometric_edges(band, GEOMETRIC_LIMIT)]
        pieces.append(RadialGrid.from_panels(outward, PROFILE_NODES))
        outer_start = outward[-1]
    radius = max(truncation_radius(tf, p), outer_start + COARSE_PANEL_WIDTH)
    pieces.append(_coarse(outer_start, radius))

    return RadialGrid.concatenate([g for g in pieces if g is not None])


# ---------------------------------------------------------------------------
# Profiles and norms
# ---------------------------------------------------------------------------

def f_lambda_profile(
    tf: TestFunctionSpec,
    quad: QuadratureSpec,
    p: float = 1.0,
    *,
    threads: int = 1,
    show_progress: bool = False,
) -> RadialProfile:
    """f_lambda sampled on :func:`profile_grid`, batched over radii."""
    grid = profile_grid(tf, p)
    log.info("f_lambda profile: lambda=%g, n=%d, %d radii", tf.lam, tf.n, grid.size)
    batches = chunked(grid.radii, BATCH_RADII)
    values = run_ordered(
        lambda radii: f_lambda_batch(tf, radii, quad),
        batches,
        threads=threads,
        show_progress=show_progress,
        description=f"f_lambda profile (lambda={tf.lam:g})",
    )
    return RadialProfile(grid, np.concatenate(values), label=f"f_lambda lambda={tf.lam:g}")


def f_lambda_lp_norm(
    tf: TestFunctionSpec,
    p: float,
    quad: QuadratureSpec,
    *,
    threads: int = 1,
    show_progress: bool = False,
) -> float:
    """||f_lambda||_{L^p(R^n)} over the graded profile."""
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    profile = f_lambda_profile(tf, quad, p, threads=threads, show_progress=show_progress)
    return lp_norm_radial(profile, p, tf.n)


def envelope_ratios(tf: TestFunctionSpec, radii, values) -> EnvelopeRatios:
    """Compare sampled |f_lambda| with the three regime envelopes.

    origin (|x| <= 1/lambda): raw maximum;
    off-sphere (||x|-1| >= 1/4): max |f| / (lambda (lambda ||x|-1||)^{-4});
    near-sphere (||x|-1| < 1/4): max |f| / (lambda^{(n+1)/2} |x|^{(1-n)/2}).
    """
    radii = _check_radii(radii)
    mags = np.abs(np.asarray(values, dtype=complex))
    if mags.shape != radii.shape:
        raise DomainError("radii and values must have the same length")
    lam, n = tf.lam, tf.n
    dist = np.abs(radii - 1.0)

    origin = radii <= 1.0 / lam
    off = (dist >= OFF_SPHERE_DISTANCE) & ~origin
    near = dist < OFF_SPHERE_DISTANCE

    def _max(mask: np.ndarray, ratio: np.ndarray) -> float | None:
        return float(ratio[mask].max()) if mask.any() else None

    off_env = lam * (lam * np.where(off, dist, 1.0)) ** (-ENVELOPE_ORDER)
    near_env = lam ** ((n + 1) / 2) * np.where(near, radii, 1.0) ** ((1 - n) / 2)
    return EnvelopeRatios(
        lam=lam,
        origin_max=_max(origin, mags),
        off_sphere_ratio=_max(off, mags / off_env),
        near_sphere_ratio=_max(near, mags / near_env),
    )
