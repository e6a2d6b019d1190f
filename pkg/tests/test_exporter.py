"""Tests for the CSV and JSON writers."""
import csv
import json

import numpy as np
import pytest

from smlab.models.grids import RadialGrid
from smlab.models.results import MeansEvaluation, RadialProfile, ScalingFit, ScalingQuantity
from smlab.models.specs import MeansSpec
from smlab.output.exporter import (
    EVALUATION_FIELDS,
    FIT_FIELDS,
    PROFILE_FIELDS,
    REGION_FIELDS,
    evaluations_to_csv,
    fit_to_csv,
    fit_to_json,
    format_complex,
    format_float,
    load_fit,
    profile_to_csv,
    regions_to_csv,
)
from smlab.regions import p_grid


@pytest.fixture
def fit():
    return ScalingFit(
        quantity=ScalingQuantity.TESTFN_LP_NORM, spec=MeansSpec(0.0, 2), p=4.0,
        lambdas=[64.0, 128.0, 256.0], values=[180.0, 430.0, 1020.0],
        slope=1.25, intercept=0.1, r_squared=0.9999, residuals=[0.001, -0.002, 0.001],
        predicted=1.25,
    )


def _read_csv(path):
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


class TestFormatting:
    def test_complex(self):
        assert format_complex(1) == "1+0i"
        assert format_complex(0.5 - 2j) == "0.5-2i"

    def test_float_round_trips(self):
        value = 0.1 + 0.2
        assert float(format_float(value)) == value

    def test_missing_float(self):
        assert format_float(None) == ""


class TestCsv:
    def test_profile(self, tmp_path):
        grid = RadialGrid.from_panels([0.0, 1.0], 8)
        profile = RadialProfile(grid, np.full(grid.size, 3 + 4j))
        path = profile_to_csv(profile, tmp_path / "nested" / "profile.csv")
        rows = _read_csv(path)
        assert list(rows[0]) == PROFILE_FIELDS
        assert len(rows) == 8
        assert float(rows[0]["abs"]) == 5.0

    def test_lf_line_endings(self, tmp_path):
        grid = RadialGrid.from_panels([0.0, 1.0], 8)
        path = profile_to_csv(RadialProfile(grid, np.ones(grid.size)), tmp_path / "p.csv")
        assert b"\r\n" not in path.read_bytes()

    def test_evaluations(self, tmp_path):
        evs = [MeansEvaluation(MeansSpec(0.2, 2), t, 64.0, 2.0, 1 + 1j) for t in (2.5, 3.0)]
        rows = _read_csv(evaluations_to_csv(evs, tmp_path / "means.csv"))
        assert list(rows[0]) == EVALUATION_FIELDS
        assert rows[0]["n"] == "2"
        assert [float(r["t"]) for r in rows] == [2.5, 3.0]

    def test_regions_blank_below_two(self, tmp_path, atlas):
        table = atlas.boundary_table(3, [1.5, 2.0])
        rows = _read_csv(regions_to_csv(table, tmp_path / "regions.csv"))
        assert list(rows[0]) == REGION_FIELDS
        assert rows[0]["necessary_threshold"] == ""
        assert rows[0]["gap"] == ""
        assert float(rows[1]["necessary_threshold"]) == pytest.approx(-0.5)
        assert rows[1]["verdict_below"] == "NECESSARY_VIOLATED"

    def test_regions_deterministic(self, tmp_path, atlas):
        table = atlas.boundary_table(2, p_grid(2.0, 10.0, 0.5))
        first = regions_to_csv(table, tmp_path / "a.csv").read_bytes()
        second = regions_to_csv(atlas.boundary_table(2, p_grid(2.0, 10.0, 0.5)), tmp_path / "b.csv").read_bytes()
        assert first == second

    def test_fit_points(self, tmp_path, fit):
        rows = _read_csv(fit_to_csv(fit, tmp_path / "fit.csv"))
        assert list(rows[0]) == FIT_FIELDS
        assert [float(r["lambda"]) for r in rows] == [64.0, 128.0, 256.0]
        assert rows[0]["quantity"] == "TESTFN_LP_NORM"


class TestJson:
    def test_fit_round_trip(self, tmp_path, fit):
        path = fit_to_json(fit, tmp_path / "fit.json")
        data = load_fit(path)
        assert data["slope"] == 1.25
        assert data["delta"] == 0.0
        assert data["lambdas"] == [64.0, 128.0, 256.0]

    def test_sorted_keys_and_trailing_newline(self, tmp_path, fit):
        text = fit_to_json(fit, tmp_path / "fit.json").read_text(encoding="utf-8")
        assert text.endswith("}\n")
        keys = list(json.loads(text))
        assert keys == sorted(keys)
