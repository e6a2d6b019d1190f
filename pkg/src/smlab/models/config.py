"""Run configuration with preset system (Pydantic)."""

from __future__ import annotations

import enum
import json
import math
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, field_validator, model_validator

from .results import ScalingQuantity
from .specs import MeansSpec, QuadratureSpec

LAMBDA_MIN = 2.0 ** 6
LAMBDA_MAX = 2.0 ** 12
DEFAULT_LAMBDAS = [2.0 ** 8, 2.0 ** 9, 2.0 ** 10, 2.0 ** 11]


class Preset(enum.Enum):
    """Named quadrature presets."""
    DESK = "desk"
    QUICK = "quick"
    FINE = "fine"
    CUSTOM = "custom"


class QuadratureConfig(BaseModel):
    """Composite Gauss rule settings."""
    nodes_per_panel: int = 16
    max_phase_per_panel: float = math.pi / 2
    abs_tol: float = 1e-12
    rel_tol: float = 1e-9

    @field_validator("nodes_per_panel")
    @classmethod
    def _enough_nodes(cls, v: int) -> int:
        if v < 8:
            raise ValueError(f"nodes_per_panel must be >= 8, got {v}")
        return v

    @field_validator("max_phase_per_panel")
    @classmethod
    def _phase_range(cls, v: float) -> float:
        if not 0.0 < v <= math.pi:
            raise ValueError(f"max_phase_per_panel must lie in (0, pi], got {v}")
        return v

    @field_validator("abs_tol", "rel_tol")
    @classmethod
    def _positive_tol(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("tolerances must be positive")
        return v

    def to_spec(self) -> QuadratureSpec:
        return QuadratureSpec(
            self.nodes_per_panel, self.max_phase_per_panel, self.abs_tol, self.rel_tol,
        )


# -- Preset definitions --

_DESK_OVERRIDES: dict[str, Any] = {
    "quadrature": {"nodes_per_panel": 16, "max_phase_per_panel": math.pi / 2, "rel_tol": 1e-9},
}

_QUICK_OVERRIDES: dict[str, Any] = {
    "quadrature": {"nodes_per_panel": 12, "max_phase_per_panel": math.pi, "rel_tol": 1e-7},
}

_FINE_OVERRIDES: dict[str, Any] = {
    "quadrature": {"nodes_per_panel": 24, "max_phase_per_panel": math.pi / 4, "rel_tol": 1e-11},
}

PRESET_CONFIGS: dict[Preset, dict[str, Any]] = {
    Preset.DESK: _DESK_OVERRIDES,
    Preset.QUICK: _QUICK_OVERRIDES,
    Preset.FINE: _FINE_OVERRIDES,
}


class RunConfig(BaseModel):
    """Parameters of one CLI run."""
    preset: Preset = Preset.DESK

    n: int = 2
    alpha_re: float = 0.0
    alpha_im: float = 0.0
    p: float | None = None
    lambdas: list[float] = Field(default_factory=lambda: list(DEFAULT_LAMBDAS))
    quantity: ScalingQuantity = ScalingQuantity.MEAN_AT_ORIGIN
    t: float | None = None
    radius: float | None = None
    c0: float = 0.05
    tolerance: float = 0.05
    threads: int = 1

    p_min: float = 2.0
    p_max: float = 10.0
    p_step: float = 0.5

    out: Path | None = None
    quadrature: QuadratureConfig = Field(default_factory=QuadratureConfig)

    @field_validator("n")
    @classmethod
    def _dimension(cls, v: int) -> int:
        if v < 2:
            raise ValueError(f"dimension n must be >= 2, got {v}")
        return v

    @field_validator("p")
    @classmethod
    def _p_at_least_one(cls, v: float | None) -> float | None:
        if v is not None and v < 1:
            raise ValueError(f"p must be >= 1, got {v}")
        return v

    @field_validator("lambdas")
    @classmethod
    def _lambda_window(cls, v: list[float]) -> list[float]:
        if len(v) < 2:
            raise ValueError("a lambda sweep needs at least 2 points")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("lambdas must be strictly increasing")
        if v[0] < LAMBDA_MIN or v[-1] > LAMBDA_MAX:
            raise ValueError(f"lambdas must lie in [{LAMBDA_MIN:g}, {LAMBDA_MAX:g}]")
        return v

    @field_validator("t", "c0", "tolerance")
    @classmethod
    def _strictly_positive(cls, v: float | None) -> float | None:
        if v is not None and not v > 0:
            raise ValueError(f"must be positive, got {v}")
        return v

    @field_validator("radius")
    @classmethod
    def _nonnegative(cls, v: float | None) -> float | None:
        if v is not None and v < 0:
            raise ValueError(f"radius must be >= 0, got {v}")
        return v

    @field_validator("threads")
    @classmethod
    def _thread_count(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"threads must be >= 1, got {v}")
        return v

    @model_validator(mode="after")
    def _p_range(self) -> RunConfig:
        if self.p_step <= 0:
            raise ValueError(f"p step must be positive, got {self.p_step}")
        if self.p_min <= 1 or self.p_max < self.p_min:
            raise ValueError(f"p range must satisfy 1 < p_min <= p_max, got [{self.p_min}, {self.p_max}]")
        return self

    @property
    def means(self) -> MeansSpec:
        return MeansSpec(complex(self.alpha_re, self.alpha_im), self.n)

    @property
    def quad(self) -> QuadratureSpec:
        return self.quadrature.to_spec()

    @classmethod
    def from_preset(cls, preset: Preset | str, **overrides: Any) -> RunConfig:
        """Create a config from a named preset with optional overrides."""
        if isinstance(preset, str):
            preset = Preset(preset)

        if preset == Preset.CUSTOM:
            return cls(preset=preset, **overrides)

        base = PRESET_CONFIGS.get(preset, {})
        merged: dict[str, Any] = {"preset": preset}

        for key, value in base.items():
            if isinstance(value, dict) and key in overrides and isinstance(overrides[key], dict):
                merged[key] = {**value, **overrides.pop(key)}
            else:
                merged[key] = value

        merged.update(overrides)
        return cls(**merged)

    @classmethod
    def from_file(cls, path: Path, **overrides: Any) -> RunConfig:
        """Load a JSON config file; *overrides* (e.g. from CLI flags) win."""
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        preset = overrides.pop("preset", None) or data.pop("preset", Preset.DESK.value)
        data.pop("preset", None)
        for key, value in overrides.items():
            if isinstance(value, dict) and isinstance(data.get(key), dict):
                data[key] = {**data[key], **value}
            else:
                data[key] = value
        return cls.from_preset(preset, **data)
