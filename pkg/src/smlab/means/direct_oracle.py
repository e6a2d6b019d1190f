"""A_t^alpha f(x) straight from its defining ball integral (Re alpha > 0).

    A_t^alpha f(x) = (1/Gamma(alpha)) int_{|y|<=1} (1-|y|^2)^{alpha-1} f(x - t y) dy

For radial f write y = u theta and c = cos(angle between x and theta); with
w = u^2 the integral becomes

    omega_{n-2} / (2 Gamma(alpha)) int_0^1 (1-w)^{alpha-1} w^{(n-2)/2}
        int_{-1}^{1} f(sqrt(|x|^2 + t^2 w - 2 |x| t sqrt(w) c)) (1-c^2)^{(n-3)/2} dc dw.

Both factors are done with Gauss-Jacobi rules carrying the endpoint weights.
The rule absorbs (1-w)^{Re alpha - 1}; (1-w)^{i Im alpha} stays in the integrand.
"""

from __future__ import annotations

import logging
import math
from typing import Callable

import numpy as np
from scipy.special import roots_jacobi

from smlab.errors import ConvergenceError, DomainError
from smlab.models.specs import MeansSpec
from smlab.special.gamma import gamma_complex

log = logging.getLogger(__name__)

INITIAL_NODES = 32
MAX_NODES = 1024

RadialFunction = Callable[[np.ndarray], np.ndarray]


def _ball_integral(spec: MeansSpec, t: float, f: RadialFunction, radius: float, nodes: int) -> complex:
    n = spec.n
    a = spec.re_alpha - 1.0
    b = (n - 2) / 2
    x, wx = roots_jacobi(nodes, a, b)
    # map [-1, 1] -> [0, 1]: (1-w)^a w^b dw = 2^{-a-b-1} (1-x)^a (1+x)^b dx
    w = 0.5 * (1.0 + x)
    ww = wx * 2.0 ** (-a - b - 1)
    if spec.im_alpha:
        ww = ww * np.exp(1j * spec.im_alpha * np.log1p(-w))

    e = (n - 3) / 2
    c, wc = roots_jacobi(nodes, e, e)
    dist2 = radius ** 2 + t ** 2 * w[:, None] - 2 * radius * t * np.sqrt(w)[:, None] * c[None, :]
    values = np.asarray(f(np.sqrt(np.maximum(dist2, 0.0))), dtype=complex)
    omega = 2.0 * math.pi ** ((n - 1) / 2) / math.gamma((n - 1) / 2)
    inner = values @ wc
    return complex(omega * (ww @ inner) / (2.0 * gamma_complex(spec.alpha)))


def mean_direct_oracle(
    spec: MeansSpec, t: float, f: RadialFunction, radius: float, tol: float = 1e-10,
) -> complex:
    """A_t^alpha f at |x| = *radius* by direct quadrature over the unit ball.

    *f* maps an array of radii to values.  The node count starts at 32 per
    variable and doubles until two successive results agree to *tol*
    (relative); :class:`ConvergenceError` past 1024 nodes.
    """
    if spec.re_alpha <= 0:
        raise DomainError(f"the ball integral needs Re alpha > 0, got alpha={spec.alpha!r}")
    if not (math.isfinite(t) and t > 0):
        raise DomainError(f"t must be positive, got {t}")
    if not (math.isfinite(radius) and radius >= 0):
        raise DomainError(f"radius must be >= 0, got {radius}")

    nodes = INITIAL_NODES
    previous = _ball_integral(spec, t, f, radius, nodes)
    while nodes < MAX_NODES:
        nodes *= 2
        current = _ball_integral(spec, t, f, radius, nodes)
        if abs(current - previous) <= tol * max(abs(current), 1e-300):
            log.debug("ball integral converged with %d x %d nodes", nodes, nodes)
            return current
        previous = current
    raise ConvergenceError(
        f"ball integral did not reach relative tolerance {tol:g} with {MAX_NODES} nodes"
    )
