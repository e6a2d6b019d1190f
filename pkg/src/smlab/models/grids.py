"""Radial sample grids carrying their own quadrature weights."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from smlab.errors import DomainError


@dataclass(frozen=True)
class RadialGrid:
    """Increasing radii with positive composite-rule weights.

    Built panel by panel, so the weights of a grid sum to the length of the
    interval it covers.
    """
    radii: np.ndarray
    weights: np.ndarray
    covered_length: float

    def __post_init__(self) -> None:
        radii = np.asarray(self.radii, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if radii.ndim != 1 or radii.shape != weights.shape:
            raise DomainError("radii and weights must be 1-D arrays of equal length")
        if radii.size and (radii[0] < 0 or np.any(np.diff(radii) <= 0)):
            raise DomainError("radii must be nonnegative and strictly increasing")
        if np.any(weights <= 0):
            raise DomainError("weights must be positive")
        if abs(weights.sum() - self.covered_length) > 1e-12 * max(self.covered_length, 1.0):
            raise DomainError(
                f"weights sum to {weights.sum()!r}, expected the covered length "
                f"{self.covered_length!r}"
            )
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_panels(cls, edges: np.ndarray | list[float], nodes_per_panel: int) -> RadialGrid:
        """Composite Gauss-Legendre grid on the panels between consecutive *edges*."""
        edges = np.asarray(edges, dtype=float)
        if edges.ndim != 1 or edges.size < 2 or np.any(np.diff(edges) <= 0):
            raise DomainError("panel edges must be a strictly increasing list of >= 2 points")
        x, w = np.polynomial.legendre.leggauss(nodes_per_panel)
        half = 0.5 * np.diff(edges)
        mid = 0.5 * (edges[1:] + edges[:-1])
        radii = (mid[:, None] + half[:, None] * x[None, :]).ravel()
        weights = (half[:, None] * w[None, :]).ravel()
        return cls(radii, weights, float(edges[-1] - edges[0]))

    @classmethod
    def concatenate(cls, grids: list[RadialGrid]) -> RadialGrid:
        """Join grids covering disjoint, increasing intervals."""
        grids = [g for g in grids if g.size]
        if not grids:
            return cls(np.empty(0), np.empty(0), 0.0)
        return cls(
            np.concatenate([g.radii for g in grids]),
            np.concatenate([g.weights for g in grids]),
            float(sum(g.covered_length for g in grids)),
        )

    @property
    def size(self) -> int:
        return int(self.radii.size)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        if not self.size:
            return "RadialGrid(empty)"
        return f"RadialGrid(points={self.size}, r=[{self.radii[0]:.6g}, {self.radii[-1]:.6g}])"
