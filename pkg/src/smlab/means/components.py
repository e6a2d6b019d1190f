"""Phase decompositions of A_t^alpha f_lambda(x).

Replacing a Bessel factor J_beta(z) by its two waves z^{-1/2} b0 e^{iz} and
z^{-1/2} d0 e^{-iz} splits the mean into pieces with explicit phases; the
remainder is whatever the two-wave forms leave out.

* :func:`origin_components` (t = 1, small |x|): the multiplier is split.
  The b0 wave cancels e^{-2 pi i lambda r} and gives the main term; the d0
  wave leaves e^{-4 pi i lambda r}.
* :func:`tuned_components` (|x| > 0): both the sphere factor and the
  multiplier are split, giving four phases 2 pi lambda r (+-|x| +- t - 1).
  At t = |x| + 1 the (-|x|, +t) phase is stationary.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from smlab.errors import DomainError
from smlab.fourier.radial import multiplier_m, sphere_fourier
from smlab.models.results import MeanComponents
from smlab.models.specs import MeansSpec, QuadratureSpec, TestFunctionSpec
from smlab.quadrature.oscillatory import integrate_oscillatory
from smlab.special.bessel import asymptotic_coeffs
from smlab.testfn.f_lambda import testfn_prefactor, testfn_weight
from .multiplier_route import check_same_means

log = logging.getLogger(__name__)

STATIONARY_TOLERANCE = 1e-9


def _waves(beta: complex, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """z^{-1/2} b0 e^{iz} and z^{-1/2} d0 e^{-iz}."""
    coeffs = asymptotic_coeffs(beta, 0)
    root = np.sqrt(z)
    return coeffs.b0 * np.exp(1j * z) / root, coeffs.d0 * np.exp(-1j * z) / root


def _multiplier_waves(spec: MeansSpec, s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """The two-wave parts of m^alpha(s) = pi^{1-alpha} s^{-mu} J_mu(2 pi s)."""
    mu = spec.multiplier_order
    scale = np.pi ** (1 - spec.alpha) * np.exp(-mu * np.log(s))
    plus, minus = _waves(mu, 2 * math.pi * s)
    return scale * plus, scale * minus


def _sphere_waves(n: int, s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """The two-wave parts of theta(s) = 2 pi s^{-nu} J_nu(2 pi s)."""
    nu = (n - 2) / 2
    scale = 2 * math.pi * s ** (-nu)
    plus, minus = _waves(nu, 2 * math.pi * s)
    return scale * plus, scale * minus


def origin_components(
    spec: MeansSpec, tf: TestFunctionSpec, quad: QuadratureSpec, radius: float = 0.0,
) -> MeanComponents:
    """A_1^alpha f_lambda(x) as main + counter_rotating + remainder."""
    check_same_means(spec, tf)
    if radius < 0:
        raise DomainError(f"radius must be >= 0, got {radius}")
    multiplier_m(spec, 0.0)
    lam = tf.lam

    def amplitude(r: np.ndarray) -> np.ndarray:
        s = lam * r
        common = sphere_fourier(spec.n, radius * s) * testfn_weight(tf, r)
        plus, minus = _multiplier_waves(spec, s)
        return np.vstack([multiplier_m(spec, s) * common, plus * common, minus * common])

    freq = 2 * math.pi * lam * (radius + 2.0)
    total, main, counter = testfn_prefactor(tf) * integrate_oscillatory(
        amplitude, tf.bump.support, freq, quad,
    )
    parts = {
        "main": complex(main),
        "counter_rotating": complex(counter),
        "remainder": complex(total - main - counter),
    }
    log.debug("origin components at lambda=%g: %s", lam, parts)
    return MeanComponents(complex(total), parts, stationary="main")


def _phase_name(sx: int, st: int) -> str:
    return f"{'+' if sx > 0 else '-'}x{'+' if st > 0 else '-'}t"


def tuned_components(
    spec: MeansSpec, tf: TestFunctionSpec, radius: float, t: float, quad: QuadratureSpec,
) -> MeanComponents:
    """A_t^alpha f_lambda(x) as four two-wave phase pieces plus a remainder.

    Parts are keyed ``"+x+t"``, ``"+x-t"``, ``"-x+t"``, ``"-x-t"`` (signs of
    |x| and t in the phase) and ``"remainder"``.  ``stationary`` names the
    piece whose phase vanishes identically, if any.
    """
    check_same_means(spec, tf)
    if radius <= 0:
        raise DomainError(f"the sphere factor needs |x| > 0, got {radius}")
    if t <= 0:
        raise DomainError(f"t must be positive, got {t}")
    multiplier_m(spec, 0.0)
    lam = tf.lam
    signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)]

    def amplitude(r: np.ndarray) -> np.ndarray:
        s = lam * r
        weight = testfn_weight(tf, r)
        theta_waves = dict(zip((1, -1), _sphere_waves(spec.n, radius * s)))
        m_waves = dict(zip((1, -1), _multiplier_waves(spec, t * s)))
        rows = [sphere_fourier(spec.n, radius * s) * multiplier_m(spec, t * s) * weight]
        rows += [theta_waves[sx] * m_waves[st] * weight for sx, st in signs]
        return np.vstack(rows)

    freq = 2 * math.pi * lam * (radius + t + 1.0)
    values = testfn_prefactor(tf) * integrate_oscillatory(amplitude, tf.bump.support, freq, quad)
    total = complex(values[0])
    parts = {_phase_name(sx, st): complex(v) for (sx, st), v in zip(signs, values[1:])}
    parts["remainder"] = total - sum(parts.values())

    stationary = None
    for sx, st in signs:
        if abs(sx * radius + st * t - 1.0) <= STATIONARY_TOLERANCE:
            stationary = _phase_name(sx, st)
    return MeanComponents(total, parts, stationary)
