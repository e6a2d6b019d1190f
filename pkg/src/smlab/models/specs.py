"""Parameter types: what an experiment is about."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from smlab.errors import DomainError


def _finite_complex(value: complex, name: str) -> complex:
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class BesselOrder:
    """The (complex) order beta of a Bessel function J_beta."""
    beta: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", _finite_complex(self.beta, "Bessel order"))

    def to_dict(self) -> dict:
        return {"beta_re": self.beta.real, "beta_im": self.beta.imag}

    @classmethod
    def from_dict(cls, data: dict) -> BesselOrder:
        return cls(complex(data["beta_re"], data.get("beta_im", 0.0)))


@dataclass(frozen=True)
class MeansSpec:
    """Parameters (alpha, n) of the generalized spherical means A_t^alpha on R^n."""
    alpha: complex
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _finite_complex(self.alpha, "alpha"))
        if isinstance(self.n, bool) or int(self.n) != self.n:
            raise DomainError(f"dimension n must be an integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if self.n < 2:
            raise DomainError(f"dimension n must be >= 2, got {self.n}")

    @property
    def re_alpha(self) -> float:
        return self.alpha.real

    @property
    def im_alpha(self) -> float:
        return self.alpha.imag

    @property
    def multiplier_order(self) -> complex:
        """Order n/2 + alpha - 1 of the Bessel function inside m^alpha."""
        return self.n / 2 + self.alpha - 1

    @property
    def sphere_order(self) -> float:
        """Order (n-2)/2 of the Bessel function inside the sphere transform."""
        return (self.n - 2) / 2

    def shifted(self, d_alpha: complex) -> MeansSpec:
        """Same dimension, alpha moved by *d_alpha*."""
        return MeansSpec(self.alpha + d_alpha, self.n)

    def to_dict(self) -> dict:
        return {"n": self.n, "alpha_re": self.alpha.real, "alpha_im": self.alpha.imag}

    @classmethod
    def from_dict(cls, data: dict) -> MeansSpec:
        return cls(complex(data["alpha_re"], data.get("alpha_im", 0.0)), data["n"])


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite Gauss rule parameters for oscillatory integrals."""
    nodes_per_panel: int = 16
    max_phase_per_panel: float = math.pi / 2  # radians
    abs_tol: float = 1e-12
    rel_tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.nodes_per_panel < 8:
            raise DomainError(f"nodes_per_panel must be >= 8, got {self.nodes_per_panel}")
        if not 0.0 < self.max_phase_per_panel <= math.pi:
            raise DomainError(
                f"max_phase_per_panel must lie in (0, pi], got {self.max_phase_per_panel}"
            )
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise DomainError("quadrature tolerances must be positive")

    def refined(self) -> QuadratureSpec:
        """Same rule with half the phase per panel."""
        return QuadratureSpec(
            self.nodes_per_panel, self.max_phase_per_panel / 2, self.abs_tol, self.rel_tol,
        )

    def to_dict(self) -> dict:
        return {
            "nodes_per_panel": self.nodes_per_panel,
            "max_phase_per_panel": self.max_phase_per_panel,
            "abs_tol": self.abs_tol,
            "rel_tol": self.rel_tol,
        }

    @classmethod
    def from_dict(cls, data: dict) -> QuadratureSpec:
        return cls(**data)


@dataclass(frozen=True)
class BumpSpec:
    """Smooth plateau bump chi: 1 on the plateau, 0 outside the support."""
    support: tuple[float, float] = (0.5, 2.0)
    plateau: tuple[float, float] = (0.75, 1.25)

    def __post_init__(self) -> None:
        a, b = self.support
        c, d = self.plateau
        if not a < c < d < b:
            raise DomainError(
                f"plateau {self.plateau} must lie strictly inside support {self.support}"
            )
        if a < 0:
            raise DomainError(f"bump support must be in [0, inf), got {self.support}")

    @property
    def rise_width(self) -> float:
        return self.plateau[0] - self.support[0]

    @property
    def fall_width(self) -> float:
        return self.support[1] - self.plateau[1]

    def to_dict(self) -> dict:
        return {"support": list(self.support), "plateau": list(self.plateau)}

    @classmethod
    def from_dict(cls, data: dict) -> BumpSpec:
        return cls(tuple(data["support"]), tuple(data["plateau"]))


@dataclass(frozen=True)
class TestFunctionSpec:
    """The test function f_lambda^alpha with Fourier side

    e^{-2 pi i |xi|} chi(|xi| / lambda) |xi|^{i Im alpha}.
    """
    __test__ = False  # not a pytest class

    means: MeansSpec
    lam: float
    bump: BumpSpec = field(default_factory=BumpSpec)

    def __post_init__(self) -> None:
        if not math.isfinite(self.lam) or self.lam < 4:
            raise DomainError(f"lambda must be >= 4, got {self.lam}")

    @property
    def n(self) -> int:
        return self.means.n

    def with_lambda(self, lam: float) -> TestFunctionSpec:
        return TestFunctionSpec(self.means, lam, self.bump)

    def to_dict(self) -> dict:
        return {"means": self.means.to_dict(), "lambda": self.lam, "bump": self.bump.to_dict()}

    @classmethod
    def from_dict(cls, data: dict) -> TestFunctionSpec:
        return cls(
            MeansSpec.from_dict(data["means"]),
            data["lambda"],
            BumpSpec.from_dict(data["bump"]) if "bump" in data else BumpSpec(),
        )
