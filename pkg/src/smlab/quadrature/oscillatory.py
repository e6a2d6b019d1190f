"""Composite Gauss-Legendre quadrature for oscillatory integrands.

Panels are sized from a bound on the phase derivative so that no panel
carries more than ``max_phase_per_panel`` radians of oscillation.  Every
result is checked against one doubling of the panel count.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import Callable

import numpy as np

from smlab.errors import ConvergenceError, DomainError
from smlab.models.specs import QuadratureSpec

log = logging.getLogger(__name__)

Amplitude = Callable[[np.ndarray], np.ndarray]

# Integrand samples evaluated per amplitude call.
MAX_BLOCK_SAMPLES = 1 << 15
# Roundoff allowance, in units of eps * int |integrand|.
ROUNDOFF_FACTOR = 1e4


@lru_cache(maxsize=32)
def _legendre(nodes_per_panel: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(nodes_per_panel)


def gauss_panels(
    support: tuple[float, float], panel_count: int, nodes_per_panel: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the composite rule on equal panels of *support*."""
    a, b = support
    if not (math.isfinite(a) and math.isfinite(b)) or b <= a:
        raise DomainError(f"support must be a bounded interval with a < b, got {support}")
    if panel_count < 1:
        raise DomainError(f"panel_count must be >= 1, got {panel_count}")
    x, w = _legendre(nodes_per_panel)
    edges = np.linspace(a, b, panel_count + 1)
    half = 0.5 * (edges[1] - edges[0])
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half * x[None, :]).ravel()
    weights = np.tile(half * w, panel_count)
    return nodes, weights


def panel_count_for(support: tuple[float, float], freq_bound: float, spec: QuadratureSpec) -> int:
    """Smallest panel count keeping the width <= max_phase / max(freq, 1)."""
    width = spec.max_phase_per_panel / max(freq_bound, 1.0)
    return max(1, int(math.ceil((support[1] - support[0]) / width)))


def _composite(
    amplitude: Amplitude, support: tuple[float, float], panels: int, nodes_per_panel: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Sum of w * amplitude and of w * |amplitude|, evaluated in blocks of panels."""
    a, b = support
    x, w = _legendre(nodes_per_panel)
    width = (b - a) / panels
    block = max(1, MAX_BLOCK_SAMPLES // nodes_per_panel)
    total = None
    magnitude = None
    for start in range(0, panels, block):
        stop = min(panels, start + block)
        left = a + width * np.arange(start, stop)
        nodes = (left[:, None] + 0.5 * width * (x[None, :] + 1.0)).ravel()
        weights = np.tile(0.5 * width * w, stop - start)
        values = np.asarray(amplitude(nodes), dtype=complex)
        part = values @ weights
        mass = np.abs(values) @ weights
        total = part if total is None else total + part
        magnitude = mass if magnitude is None else magnitude + mass
    return total, magnitude


def integrate_oscillatory(
    amplitude: Amplitude,
    support: tuple[float, float],
    freq_bound: float,
    spec: QuadratureSpec,
):
    """Integrate *amplitude* over *support* with a refinement check.

    *amplitude* maps an array of nodes to values of the same length, or to an
    array of shape (m, len(nodes)) for m integrands sharing the nodes; the
    result is then a length-m array.  Raises :class:`ConvergenceError` when
    doubling the panels moves any component by more than
    max(abs_tol, rel_tol * |value|), with a roundoff allowance proportional
    to the integral of |amplitude|.
    """
    if freq_bound < 0 or not math.isfinite(freq_bound):
        raise DomainError(f"freq_bound must be finite and >= 0, got {freq_bound}")
    a, b = support
    if not (math.isfinite(a) and math.isfinite(b)) or b <= a:
        raise DomainError(f"support must be a bounded interval with a < b, got {support}")

    panels = panel_count_for(support, freq_bound, spec)
    coarse, _ = _composite(amplitude, support, panels, spec.nodes_per_panel)
    fine, mass = _composite(amplitude, support, 2 * panels, spec.nodes_per_panel)
    scalar = np.ndim(fine) == 0
    coarse, fine, mass = np.atleast_1d(coarse, fine, mass)

    change = np.abs(fine - coarse)
    allowed = np.maximum(
        np.maximum(spec.abs_tol, spec.rel_tol * np.abs(fine)),
        ROUNDOFF_FACTOR * np.finfo(float).eps * mass,
    )
    if np.any(change > allowed):
        worst = int(np.argmax(change / allowed))
        raise ConvergenceError(
            f"panel doubling changed the integral by {change[worst]:.3e} "
            f"(allowed {allowed[worst]:.3e}) with {panels} panels on {support}"
        )
    log.debug("integrated %d component(s) on %s with %d panels", fine.size, support, 2 * panels)
    return complex(fine[0]) if scalar else fine
