"""Export profiles, evaluations, fits and atlas tables to CSV and JSON files."""

from __future__ import annotations

import csv
import json
from pathlib import Path

from smlab.models.results import (
    BoundaryRow,
    MeansEvaluation,
    NecessityReport,
    RadialProfile,
    ScalingFit,
)

PROFILE_FIELDS = ["radius", "re", "im", "abs"]
EVALUATION_FIELDS = ["n", "re_alpha", "im_alpha", "t", "lambda", "radius", "re", "im", "abs"]
REGION_FIELDS = [
    "n", "p", "inv_p", "necessary_threshold", "sufficient_threshold",
    "sufficient_condition", "gap", "verdict_below", "verdict_above",
]
FIT_FIELDS = ["quantity", "n", "alpha_re", "alpha_im", "p", "lambda", "value", "residual"]


def format_float(value: float | None) -> str:
    """17 significant digits; empty for a missing value."""
    if value is None:
        return ""
    return f"{float(value):.17g}"


def format_complex(value: complex) -> str:
    """``re+imi`` with 17 significant digits, e.g. ``1+0i``."""
    value = complex(value)
    return f"{value.real:.17g}{value.imag:+.17g}i"


def _cell(value) -> str:
    if isinstance(value, float):
        return format_float(value)
    return "" if value is None else str(value)


def _write_rows(path: str | Path, fieldnames: list[str], rows: list[dict]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
    return path


def _write_json(path: str | Path, data) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n", encoding="utf-8") as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write("\n")
    return path


def profile_to_csv(profile: RadialProfile, path: str | Path) -> Path:
    """One row per sample: radius, re, im, abs."""
    rows = [dict(zip(PROFILE_FIELDS, row)) for row in profile.rows()]
    return _write_rows(path, PROFILE_FIELDS, rows)


def evaluations_to_csv(evaluations: list[MeansEvaluation], path: str | Path) -> Path:
    rows = []
    for ev in evaluations:
        n, *numbers = ev.row()
        rows.append(dict(zip(EVALUATION_FIELDS, [n, *(float(x) for x in numbers)])))
    return _write_rows(path, EVALUATION_FIELDS, rows)


def regions_to_csv(rows: list[BoundaryRow], path: str | Path) -> Path:
    """Atlas table; missing necessary thresholds (p < 2) and their gaps are blank."""
    data = [
        {
            "n": row.n,
            "p": row.p,
            "inv_p": row.inv_p,
            "necessary_threshold": row.necessary_threshold,
            "sufficient_threshold": row.sufficient_threshold,
            "sufficient_condition": row.sufficient_condition,
            "gap": row.gap,
            "verdict_below": row.verdict_below.value,
            "verdict_above": row.verdict_above.value,
        }
        for row in rows
    ]
    return _write_rows(path, REGION_FIELDS, data)


def fit_to_json(fit: ScalingFit, path: str | Path) -> Path:
    return _write_json(path, fit.to_dict())


def fit_to_csv(fit: ScalingFit, path: str | Path) -> Path:
    """The measured points of a fit, one row per lambda."""
    rows = [
        {
            "quantity": fit.quantity.value,
            "n": fit.spec.n,
            "alpha_re": fit.spec.re_alpha,
            "alpha_im": fit.spec.im_alpha,
            "p": fit.p,
            "lambda": lam,
            "value": value,
            "residual": residual,
        }
        for lam, value, residual in zip(fit.lambdas, fit.values, fit.residuals)
    ]
    return _write_rows(path, FIT_FIELDS, rows)


def report_to_json(report: NecessityReport, path: str | Path) -> Path:
    return _write_json(path, report.to_dict())


def load_fit(path: str | Path) -> dict:
    """Read back a fit written by :func:`fit_to_json`."""
    with open(Path(path), encoding="utf-8") as f:
        return json.load(f)
