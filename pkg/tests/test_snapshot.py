"""Snapshot-level checks for the bundled panel: quoted country values,
figure/delta emissions and the diagnostics pipeline on real-shaped data."""

import json
import math

import numpy as np
import pytest

from panelgls import egls_fit, jarque_bera, pearson_matrix
from panelgls.pipeline import RunConfig, run_pipeline
from panelgls.report import delta_report, figure_data

from conftest import MODEL, SNAPSHOT


@pytest.fixture(scope="module")
def fit(snapshot):
    return egls_fit(snapshot, MODEL)


class TestQuotedCountryValues:
    def test_2016_levels(self, snapshot):
        assert snapshot.value("RO", 2016, "povertyrate") == pytest.approx(25.3)
        assert snapshot.value("BG", 2016, "povertyrate") == pytest.approx(22.9)
        assert snapshot.value("ES", 2016, "povertyrate") == pytest.approx(22.3)
        assert snapshot.value("CZ", 2016, "povertyrate") == pytest.approx(9.7)
        assert snapshot.value("FI", 2016, "povertyrate") == pytest.approx(11.6)
        assert snapshot.value("DK", 2016, "povertyrate") == pytest.approx(11.9)
        assert snapshot.value("LU", 2016, "povertyrate") == pytest.approx(16.5)
        assert snapshot.value("RO", 2016, "NEETsrates") == pytest.approx(17.4)
        assert snapshot.value("BG", 2016, "NEETsrates") == pytest.approx(18.2)
        assert snapshot.value("IT", 2016, "NEETsrates") == pytest.approx(19.9)
        assert snapshot.value("NL", 2016, "NEETsrates") == pytest.approx(4.6)
        assert snapshot.value("RO", 2016, "socialexp") == pytest.approx(11.6)
        assert snapshot.value("LT", 2016, "socialexp") == pytest.approx(11.2)
        assert snapshot.value("IE", 2016, "socialexp") == pytest.approx(9.9)
        assert snapshot.value("LU", 2016, "inworkpovertyrate") == pytest.approx(12.0)

    def test_poverty_deltas(self, snapshot):
        report = delta_report(snapshot, "povertyrate", 2010, 2016)
        deltas = {row["unit"]: row["delta"] for row in report["deltas"]}
        assert deltas["EE"] == pytest.approx(5.9, abs=1e-9)
        assert deltas["RO"] == pytest.approx(3.7, abs=1e-9)
        assert deltas["NL"] == pytest.approx(2.4, abs=1e-9)
        assert deltas["UK"] == pytest.approx(-1.2, abs=1e-9)
        assert deltas["DK"] == pytest.approx(-1.4, abs=1e-9)
        assert deltas["FI"] == pytest.approx(-1.5, abs=1e-9)
        values = [row["delta"] for row in report["deltas"]]
        assert values == sorted(values, reverse=True)
        assert report["aggregate"] is None  # no aggregate unit in the panel

    def test_neets_and_socialexp_deltas(self, snapshot):
        neets = {r["unit"]: r["delta"]
                 for r in delta_report(snapshot, "NEETsrates", 2010, 2016)["deltas"]}
        assert neets["IE"] == pytest.approx(-6.8, abs=1e-9)
        assert neets["LV"] == pytest.approx(-6.6, abs=1e-9)
        assert neets["EE"] == pytest.approx(-4.9, abs=1e-9)
        assert neets["CY"] == pytest.approx(4.3, abs=1e-9)
        social = {r["unit"]: r["delta"]
                  for r in delta_report(snapshot, "socialexp", 2010, 2016)["deltas"]}
        assert social["IE"] == pytest.approx(-7.7, abs=1e-9)
        assert social["HU"] == pytest.approx(-3.1, abs=1e-9)
        assert social["FI"] == pytest.approx(2.8, abs=1e-9)
        assert social["RO"] == pytest.approx(-2.3, abs=1e-9)

    def test_delta_same_period_all_zero(self, snapshot):
        report = delta_report(snapshot, "povertyrate", 2013, 2013)
        assert all(row["delta"] == 0.0 for row in report["deltas"])


class TestPooledCorrelations:
    def test_dependent_correlations(self, snapshot):
        corr = pearson_matrix(
            snapshot,
            ["povertyrate", "inworkpovertyrate", "socialexp", "NEETsrates"])
        assert corr[0, 1] == pytest.approx(0.7423, abs=0.01)
        assert corr[0, 2] == pytest.approx(-0.3514, abs=0.01)
        assert corr[0, 3] == pytest.approx(0.6361, abs=0.01)

    def test_figure_emission(self, snapshot):
        fig = figure_data(snapshot, "povertyrate", "inworkpovertyrate")
        assert fig["pearson"] == pytest.approx(0.7423, abs=0.01)
        # simple-regression fit share equals the squared pooled correlation
        assert fig["r_squared"] == pytest.approx(fig["pearson"] ** 2, abs=1e-9)
        assert len(fig["rows"]) == 196
        fig2 = figure_data(snapshot, "povertyrate", "NEETsrates")
        assert fig2["pearson"] == pytest.approx(0.6361, abs=0.01)

    def test_self_pair(self, snapshot):
        fig = figure_data(snapshot, "povertyrate", "povertyrate")
        assert fig["pearson"] == pytest.approx(1.0, abs=1e-12)
        assert fig["r_squared"] == pytest.approx(1.0, abs=1e-9)


class TestSnapshotDiagnostics:
    def test_weighted_residual_normality(self, fit):
        stat, prob = jarque_bera(fit.base.residuals)
        assert prob == pytest.approx(0.2995, abs=0.05)
        assert prob > 0.05  # normality not rejected
        assert stat == pytest.approx(-2.0 * math.log(prob), abs=1e-9)

    def test_bpg_block_reproduced(self, snapshot, fit):
        from panelgls.dataset import design_matrices
        from panelgls.diagnostics import bpg_test

        y, x, _ = design_matrices(snapshot, MODEL)
        lm, dof, prob, aux = bpg_test(fit.raw_residuals, x)
        assert dof == 3
        assert lm == pytest.approx(196 * aux.stats.r_squared, rel=1e-12)
        assert prob > 0.05  # homoskedastic verdict
        # coefficient block of the auxiliary fit, within calibration slack
        assert aux.coefficients == pytest.approx(
            [-0.023548, -0.065685, 0.018240, 1.975632], abs=0.2)

    def test_klein_matches_quoted_maximum(self, snapshot, fit):
        from panelgls import klein_check

        corr = pearson_matrix(snapshot, list(MODEL.regressors))
        verdict, pair, value = klein_check(corr, fit.weighted_stats.r_squared)
        assert verdict == "respected"
        assert abs(value) == pytest.approx(0.38057, abs=0.01)

    def test_full_pipeline_report_shape(self):
        config = RunConfig.from_dict({
            "data": str(SNAPSHOT),
            "model": {"dependent": "povertyrate",
                      "regressors": ["inworkpovertyrate", "socialexp",
                                     "NEETsrates"],
                      "sample": [2010, 2016]},
            "diagnostics": {"dw_bounds": {"dl": 1.73445, "du": 1.79688}},
        })
        report = run_pipeline(config)
        assert report["diagnostics"]["dw"]["decision"] == "no_autocorrelation"
        assert report["diagnostics"]["bpg"]["verdict"] == "homoskedastic"
        assert report["diagnostics"]["klein"]["verdict"] == "respected"
        for block in report["unit_root"].values():
            assert block["decision"] == "stationary"
        assert json.dumps(report)  # fully serializable


class TestSnapshotSubsets:
    def test_single_period_window(self, snapshot):
        from panelgls import subset

        one = subset(snapshot, ["povertyrate"], (2012, 2012))
        assert one.n_periods == 1
        assert one.n_obs == 28

    def test_full_window_roundtrip(self, snapshot):
        from panelgls import subset

        again = subset(snapshot, list(snapshot.variable_names()), (2010, 2016))
        assert again.period_ids == snapshot.period_ids
        assert again.cross_section_ids == snapshot.cross_section_ids
        for name in snapshot.variable_names():
            np.testing.assert_array_equal(again.matrix(name),
                                          snapshot.matrix(name))
