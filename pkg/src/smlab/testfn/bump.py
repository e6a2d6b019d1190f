"""Smooth plateau bump built from the exp(-1/t) step."""

from __future__ import annotations

import numpy as np

from smlab.models.specs import BumpSpec


def _psi(u: np.ndarray) -> np.ndarray:
    out = np.zeros_like(u)
    pos = u > 0
    out[pos] = np.exp(-1.0 / u[pos])
    return out


def smooth_step(u):
    """C-infinity step: 0 for u <= 0, 1 for u >= 1."""
    u = np.atleast_1d(np.asarray(u, dtype=float))
    num = _psi(u)
    return num / (num + _psi(1.0 - u))


def chi(bump: BumpSpec, r):
    """chi(r): 0 outside the support, 1 on the plateau, smooth and monotone in between."""
    scalar = np.ndim(r) == 0
    r = np.atleast_1d(np.asarray(r, dtype=float))
    a, b = bump.support
    c, d = bump.plateau
    rise = smooth_step((r - a) / bump.rise_width)
    fall = smooth_step((b - r) / bump.fall_width)
    values = np.where(r < c, rise, np.where(r > d, fall, 1.0))
    return float(values[0]) if scalar else values
