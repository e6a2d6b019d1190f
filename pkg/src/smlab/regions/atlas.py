"""Exponent atlas: recorded L^p ranges for the maximal means, loaded from JSON."""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from smlab.errors import DomainError
from smlab.models.results import BoundaryRow, RegionVerdict, Verdict

# Package data directory: smlab/data/
_DATA_DIR = Path(__file__).resolve().parents[1] / "data"

BOUNDARY_TOLERANCE = 1e-12
VERDICT_OFFSET = 0.01

# Symbolic p-interval endpoints used in the data file.
_ENDPOINTS: dict[str, Callable[[int], float]] = {
    "1": lambda n: 1.0,
    "2": lambda n: 2.0,
    "2n/(n-1)": lambda n: 2.0 * n / (n - 1),
    "2(n+1)/(n-1)": lambda n: 2.0 * (n + 1) / (n - 1),
    "inf": lambda n: math.inf,
}


class ConditionRole(enum.Enum):
    SUFFICIENT = "sufficient"
    NECESSARY = "necessary"


@dataclass(frozen=True)
class ExponentCondition:
    """Re alpha (>|>=) c0 + c1 n + (c2 + c3 n) / p on p_min <= p <= p_max."""
    name: str
    role: ConditionRole
    citation: str
    p_min: str
    p_max: str
    coefficients: tuple[float, float, float, float]
    strict: bool

    def __post_init__(self) -> None:
        for end in (self.p_min, self.p_max):
            if end not in _ENDPOINTS:
                raise DomainError(f"unknown p endpoint {end!r} in condition {self.name!r}")
        if len(self.coefficients) != 4:
            raise DomainError(f"condition {self.name!r} needs 4 coefficients")

    def applies(self, n: int, p: float) -> bool:
        lo, hi = _ENDPOINTS[self.p_min](n), _ENDPOINTS[self.p_max](n)
        return lo <= p <= hi

    def threshold(self, n: int, p: float) -> float:
        c0, c1, c2, c3 = self.coefficients
        return c0 + c1 * n + (c2 + c3 * n) / p

    def holds(self, n: int, p: float, re_alpha: float) -> bool:
        """Whether re_alpha satisfies the inequality; equality within tolerance counts as equal."""
        gap = re_alpha - self.threshold(n, p)
        if self.strict:
            return gap > BOUNDARY_TOLERANCE
        return gap >= -BOUNDARY_TOLERANCE

    @classmethod
    def from_dict(cls, data: dict) -> ExponentCondition:
        return cls(
            name=data["name"],
            role=ConditionRole(data["role"]),
            citation=data.get("citation", ""),
            p_min=data["p_min"],
            p_max=data["p_max"],
            coefficients=tuple(float(c) for c in data["coefficients"]),
            strict=bool(data["strict"]),
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "role": self.role.value,
            "citation": self.citation,
            "p_min": self.p_min,
            "p_max": self.p_max,
            "coefficients": list(self.coefficients),
            "strict": self.strict,
        }


def _check_point(n: int, p: float) -> None:
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise DomainError(f"dimension n must be an integer >= 2, got {n!r}")
    if not p > 1:
        raise DomainError(f"p must be > 1, got {p}")


class ExponentAtlas:
    """Recorded sufficient and necessary conditions, in data-file order."""

    def __init__(self, conditions: list[ExponentCondition] | None = None) -> None:
        self._conditions: list[ExponentCondition] = list(conditions or [])

    # ------------------------------------------------------------------
    # Loading
    # ------------------------------------------------------------------

    @classmethod
    def load(cls, path: str | Path | None = None) -> ExponentAtlas:
        """Build an atlas from a JSON list of conditions.

        Defaults to ``smlab/data/exponent_ranges.json``.
        """
        source = Path(path) if path else _DATA_DIR / "exponent_ranges.json"
        with open(source, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        return cls([ExponentCondition.from_dict(entry) for entry in raw])

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def conditions(self) -> list[ExponentCondition]:
        return list(self._conditions)

    def by_role(self, role: ConditionRole) -> list[ExponentCondition]:
        return [c for c in self._conditions if c.role is role]

    def necessary_threshold(self, n: int, p: float) -> tuple[float, str] | None:
        """Largest applicable necessary lower bound and its name; None below p = 2."""
        _check_point(n, p)
        best: tuple[float, str] | None = None
        for cond in self.by_role(ConditionRole.NECESSARY):
            if cond.applies(n, p):
                value = cond.threshold(n, p)
                if best is None or value > best[0] + BOUNDARY_TOLERANCE:
                    best = (value, cond.name)
        return best

    def sufficient_threshold(self, n: int, p: float) -> tuple[float, str]:
        """Lowest applicable sufficient threshold and its name (first listed wins ties)."""
        _check_point(n, p)
        best: tuple[float, str] | None = None
        for cond in self.by_role(ConditionRole.SUFFICIENT):
            if cond.applies(n, p):
                value = cond.threshold(n, p)
                if best is None or value < best[0] - BOUNDARY_TOLERANCE:
                    best = (value, cond.name)
        if best is None:
            raise DomainError(f"no sufficient condition recorded for n={n}, p={p}")
        return best

    def classify(self, n: int, p: float, re_alpha: float) -> RegionVerdict:
        """SUFFICIENT_KNOWN, NECESSARY_VIOLATED or OPEN for the point (p, Re alpha)."""
        _check_point(n, p)
        suff_value, suff_name = self.sufficient_threshold(n, p)
        if re_alpha - suff_value > BOUNDARY_TOLERANCE:
            return RegionVerdict(n, p, re_alpha, Verdict.SUFFICIENT_KNOWN, suff_name)
        necessary = self.necessary_threshold(n, p)
        if necessary is not None and re_alpha - necessary[0] < -BOUNDARY_TOLERANCE:
            return RegionVerdict(n, p, re_alpha, Verdict.NECESSARY_VIOLATED, necessary[1])
        trigger = necessary[1] if necessary is not None else suff_name
        return RegionVerdict(n, p, re_alpha, Verdict.OPEN, trigger)

    def boundary_table(self, n: int, p_grid: list[float]) -> list[BoundaryRow]:
        """Thresholds, gap and sample verdicts for every p in *p_grid*."""
        rows = []
        for p in p_grid:
            p = float(p)
            suff_value, suff_name = self.sufficient_threshold(n, p)
            necessary = self.necessary_threshold(n, p)
            nec_value = necessary[0] if necessary is not None else None
            low = nec_value if nec_value is not None else suff_value
            rows.append(BoundaryRow(
                n=n,
                p=p,
                necessary_threshold=nec_value,
                sufficient_threshold=suff_value,
                sufficient_condition=suff_name,
                verdict_below=self.classify(n, p, low - VERDICT_OFFSET).verdict,
                verdict_above=self.classify(n, p, suff_value + VERDICT_OFFSET).verdict,
            ))
        return rows


def p_grid(p_min: float, p_max: float, step: float) -> list[float]:
    """p_min, p_min + step, ... up to p_max inclusive (endpoint within 1e-9 steps)."""
    if not step > 0:
        raise DomainError(f"p step must be positive, got {step}")
    if not 1 < p_min <= p_max:
        raise DomainError(f"p range must satisfy 1 < p_min <= p_max, got [{p_min}, {p_max}]")
    count = int(math.floor((p_max - p_min) / step + 1e-9)) + 1
    return [p_min + k * step for k in range(count)]
