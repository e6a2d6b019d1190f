"""A_t^alpha through its Fourier multiplier.

For radial f with radial transform F,

    A_t^alpha f(x) = int_0^inf F(s) m^alpha(t s) theta(|x| s) s^{n-1} ds.

With f = f_lambda and s = lambda r this is

    lambda^{n + i Im alpha} int theta(lambda |x| r) m^alpha(t lambda r)
        e^{-2 pi i lambda r} chi(r) r^{n-1+i Im alpha} dr.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from smlab.errors import DomainError
from smlab.fourier.radial import multiplier_m, sphere_fourier
from smlab.models.results import MeansEvaluation
from smlab.models.specs import MeansSpec, QuadratureSpec, TestFunctionSpec
from smlab.quadrature.oscillatory import integrate_oscillatory
from smlab.testfn.f_lambda import testfn_prefactor, testfn_weight

log = logging.getLogger(__name__)

# e^{-pi s^2} is below 1e-49 past this frequency.
GAUSSIAN_CUTOFF = 6.0


def _check_t(t: float) -> float:
    if not (math.isfinite(t) and t > 0):
        raise DomainError(f"t must be positive, got {t}")
    return float(t)


def _check_radii(radii) -> np.ndarray:
    radii = np.atleast_1d(np.asarray(radii, dtype=float))
    if not np.all(np.isfinite(radii)) or np.any(radii < 0):
        raise DomainError("radius must be finite and >= 0")
    return radii


def check_same_means(spec: MeansSpec, tf: TestFunctionSpec) -> None:
    """Raise DomainError unless *tf* was built for the means *spec*."""
    if tf.means != spec:
        raise DomainError(
            f"test function built for alpha={tf.means.alpha!r} n={tf.n}, "
            f"means asked for alpha={spec.alpha!r} n={spec.n}"
        )


def mean_multiplier_route_batch(
    spec: MeansSpec, t: float, tf: TestFunctionSpec, radii, quad: QuadratureSpec,
) -> np.ndarray:
    """A_t^alpha f_lambda at several radii with one quadrature."""
    check_same_means(spec, tf)
    t = _check_t(t)
    radii = _check_radii(radii)
    multiplier_m(spec, 0.0)  # pole check before any quadrature work
    lam = tf.lam

    def amplitude(r: np.ndarray) -> np.ndarray:
        arg = lam * np.multiply.outer(radii, r)
        theta = sphere_fourier(spec.n, arg.ravel()).reshape(arg.shape)
        inner = multiplier_m(spec, t * lam * r) * testfn_weight(tf, r)
        return theta * inner[None, :]

    freq = 2 * math.pi * lam * (float(radii.max()) + t + 1.0)
    values = integrate_oscillatory(amplitude, tf.bump.support, freq, quad)
    return testfn_prefactor(tf) * np.asarray(values)


def mean_multiplier_route(
    spec: MeansSpec, t: float, tf: TestFunctionSpec, radius: float, quad: QuadratureSpec,
) -> complex:
    """A_t^alpha f_lambda(x) at |x| = *radius*."""
    return complex(mean_multiplier_route_batch(spec, t, tf, [radius], quad)[0])


def evaluate_mean(
    spec: MeansSpec, t: float, tf: TestFunctionSpec, radius: float, quad: QuadratureSpec,
) -> MeansEvaluation:
    value = mean_multiplier_route(spec, t, tf, radius, quad)
    log.debug("A_t f_lambda: n=%d alpha=%s t=%g lambda=%g |x|=%g -> %s",
              spec.n, spec.alpha, t, tf.lam, radius, value)
    return MeansEvaluation(spec, t, tf.lam, radius, value)


def gaussian(radius):
    """e^{-pi |x|^2}, its own Fourier transform."""
    return np.exp(-math.pi * np.asarray(radius, dtype=float) ** 2)


def mean_gaussian_multiplier_route(
    spec: MeansSpec, t: float, radius: float, quad: QuadratureSpec,
) -> complex:
    """A_t^alpha applied to the Gaussian e^{-pi |x|^2}, via the multiplier."""
    t = _check_t(t)
    radius = float(_check_radii(radius)[0])
    multiplier_m(spec, 0.0)

    def amplitude(s: np.ndarray) -> np.ndarray:
        return (
            gaussian(s) * multiplier_m(spec, t * s)
            * sphere_fourier(spec.n, radius * s) * s ** (spec.n - 1)
        )

    freq = 2 * math.pi * (t + radius)
    return integrate_oscillatory(amplitude, (0.0, GAUSSIAN_CUTOFF), freq, quad)
