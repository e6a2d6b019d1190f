"""Radial profiles of the sphere Fourier transform and of the means multiplier.

    theta(s)   = 2 pi s^{(2-n)/2} J_{(n-2)/2}(2 pi s)          (sphere measure)
    m^alpha(s) = pi^{1-alpha} s^{1-n/2-alpha} J_{n/2+alpha-1}(2 pi s)

Both have a removable singularity at s = 0.  Below ``S_MIN`` they are
evaluated through Lambda_beta(r) = (r/2)^{-beta} J_beta(r):

    theta(s) = 2 pi^{n/2} Lambda_{(n-2)/2}(2 pi s),
    m^alpha(s) = pi^{n/2} Lambda_{n/2+alpha-1}(2 pi s).
"""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy.special import roots_jacobi

from smlab.errors import DomainError, PoleError
from smlab.models.results import DecayRow, DecayTable
from smlab.models.specs import MeansSpec
from smlab.special.bessel import bessel_j, bessel_j_scaled
from smlab.special.gamma import gamma_complex

log = logging.getLogger(__name__)

S_MIN = 1e-3
MULTIPLIER_POLE_TOLERANCE = 1e-12


def _frequencies(s) -> tuple[np.ndarray, bool]:
    scalar = np.ndim(s) == 0
    arr = np.atleast_1d(np.asarray(s, dtype=float))
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise DomainError("radial frequency s must be finite and >= 0")
    return arr, scalar


def _out(values: np.ndarray, scalar: bool):
    return complex(values[0]) if scalar else values


def _check_dimension(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise DomainError(f"dimension n must be an integer >= 2, got {n!r}")
    return int(n)


def sphere_area(n: int) -> float:
    """Surface area 2 pi^{n/2} / Gamma(n/2) of the unit sphere in R^n."""
    n = _check_dimension(n)
    return 2.0 * math.pi ** (n / 2) / math.gamma(n / 2)


def sphere_fourier(n: int, s):
    """theta(s): Fourier transform of the unit-sphere measure at |xi| = s."""
    n = _check_dimension(n)
    arr, scalar = _frequencies(s)
    nu = (n - 2) / 2
    values = np.empty(arr.shape, dtype=complex)
    small = arr < S_MIN
    if small.any():
        values[small] = 2.0 * math.pi ** (n / 2) * bessel_j_scaled(nu, 2 * math.pi * arr[small])
    big = ~small
    if big.any():
        sb = arr[big]
        values[big] = 2.0 * math.pi * sb ** (-nu) * bessel_j(nu, 2 * math.pi * sb)
    return _out(values, scalar)


def sphere_fourier_direct(n: int, s, nodes: int | None = None):
    """theta(s) by direct quadrature over the sphere.

    The surface integral of e^{2 pi i s theta_1} reduces to
    omega_{n-2} * int_{-1}^{1} e^{2 pi i s u} (1-u^2)^{(n-3)/2} du, done with
    a Gauss-Jacobi rule.  Slow; used to check :func:`sphere_fourier`.
    """
    n = _check_dimension(n)
    arr, scalar = _frequencies(s)
    if nodes is None:
        nodes = 32 + 2 * int(math.ceil(2 * math.pi * arr.max()))
    a = (n - 3) / 2
    u, w = roots_jacobi(nodes, a, a)
    omega = 2.0 * math.pi ** ((n - 1) / 2) / math.gamma((n - 1) / 2)
    values = omega * np.exp(2j * math.pi * arr[:, None] * u[None, :]) @ w
    return _out(values, scalar)


def multiplier_m(spec: MeansSpec, s):
    """m^alpha(s), the radial multiplier of A_1^alpha.

    Raises :class:`PoleError` when n/2 + alpha sits on a nonpositive integer.
    """
    shifted = spec.n / 2 + spec.alpha
    k = round(shifted.real)
    if k <= 0 and abs(shifted - k) < MULTIPLIER_POLE_TOLERANCE:
        raise PoleError(f"n/2 + alpha = {shifted!r} is a pole of Gamma")

    arr, scalar = _frequencies(s)
    mu = spec.multiplier_order
    values = np.empty(arr.shape, dtype=complex)
    small = arr < S_MIN
    if small.any():
        values[small] = math.pi ** (spec.n / 2) * bessel_j_scaled(mu, 2 * math.pi * arr[small])
    big = ~small
    if big.any():
        sb = arr[big]
        values[big] = (
            np.pi ** (1 - spec.alpha) * np.exp(-mu * np.log(sb)) * bessel_j(mu, 2 * math.pi * sb)
        )
    return _out(values, scalar)


def multiplier_at_origin(spec: MeansSpec) -> complex:
    """pi^{n/2} / Gamma(n/2 + alpha), the value m^alpha(0)."""
    return math.pi ** (spec.n / 2) / gamma_complex(spec.n / 2 + spec.alpha)


def multiplier_decay_check(spec: MeansSpec, s_grid: list[float]) -> DecayTable:
    """Tabulate |m^alpha(s)| * s^{(n-1)/2 + Re alpha} over *s_grid*."""
    s = np.asarray(s_grid, dtype=float)
    if s.ndim != 1 or s.size == 0 or s[0] <= 0 or np.any(np.diff(s) <= 0):
        raise DomainError("s_grid must be positive and strictly increasing")
    magnitudes = np.abs(multiplier_m(spec, s))
    normalized = magnitudes * s ** ((spec.n - 1) / 2 + spec.re_alpha)
    table = DecayTable(
        spec,
        [DecayRow(float(a), float(b), float(c)) for a, b, c in zip(s, magnitudes, normalized)],
    )
    if table.flagged:
        log.warning("m^alpha decay check: %d of %d points exceed twice the median",
                    len(table.flagged), len(table.rows))
    return table
