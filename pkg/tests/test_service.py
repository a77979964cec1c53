import json

import pytest
from fastapi.testclient import TestClient

from panelgls.service import create_app

from conftest import SNAPSHOT

CSV_SMALL = (
    "geo,time,variable,value\n"
    + "".join(
        f"{unit},{year},{var},{value}\n"
        for unit, rows in {
            "AA": {"y": (3.1, 3.9, 4.2, 3.7), "x": (1.0, 1.8, 2.1, 1.6),
                   "z": (7.2, 6.8, 7.5, 7.1)},
            "BB": {"y": (5.0, 5.6, 5.1, 5.8), "x": (2.2, 2.9, 2.4, 3.0),
                   "z": (6.1, 6.4, 5.9, 6.6)},
            "CC": {"y": (2.2, 2.7, 2.4, 3.0), "x": (0.5, 1.1, 0.8, 1.3),
                   "z": (8.0, 7.6, 8.2, 7.7)},
            "DD": {"y": (4.4, 4.1, 4.8, 4.3), "x": (1.9, 1.5, 2.3, 1.8),
                   "z": (6.9, 7.3, 6.5, 7.0)},
            "EE": {"y": (3.6, 4.2, 3.8, 4.5), "x": (1.2, 1.9, 1.4, 2.1),
                   "z": (7.8, 7.2, 7.9, 7.4)},
        }.items()
        for var, values in rows.items()
        for year, value in zip((2001, 2002, 2003, 2004), values)
    )
)


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        body = client.get("/health").json()
        assert body["status"] == "ok"


class TestValidate:
    def test_inline_csv(self, client):
        resp = client.post("/ingest/validate",
                           json={"data": {"csv_text": CSV_SMALL}})
        assert resp.status_code == 200
        body = resp.json()
        assert body["n_units"] == 5
        assert body["n_periods"] == 4
        assert body["n_obs"] == 20
        assert body["balanced"] is True

    def test_snapshot_by_path(self, client):
        resp = client.post("/ingest/validate",
                           json={"data": {"path": str(SNAPSHOT)}})
        assert resp.status_code == 200
        body = resp.json()
        assert body["n_units"] == 28
        assert body["n_obs"] == 196

    def test_unbalanced_is_data_error(self, client):
        broken = CSV_SMALL.replace("BB,2003,y,5.1\n", "")
        resp = client.post("/ingest/validate",
                           json={"data": {"csv_text": broken}})
        assert resp.status_code == 422
        body = resp.json()
        assert body["error"] == "UnbalancedPanel"
        assert body["family"] == "data"

    def test_missing_source_rejected(self, client):
        resp = client.post("/ingest/validate", json={"data": {}})
        assert resp.status_code == 422  # pydantic validation


class TestEstimate:
    MODEL = {"dependent": "y", "regressors": ["x", "z"]}

    def test_small_panel_estimation(self, client):
        resp = client.post("/estimate", json={
            "data": {"csv_text": CSV_SMALL},
            "model": self.MODEL,
        })
        assert resp.status_code == 200
        est = resp.json()["estimation"]
        assert est["columns"] == ["x", "z", "C"]
        assert len(est["coefficients"]) == 3
        assert est["n_obs"] == 20
        assert est["weighted"]["r_squared"] is not None

    def test_unknown_variable_is_data_error(self, client):
        resp = client.post("/estimate", json={
            "data": {"csv_text": CSV_SMALL},
            "model": {"dependent": "y", "regressors": ["nope"]},
        })
        assert resp.status_code == 422
        assert resp.json()["error"] == "UnknownVariable"
        assert resp.json()["family"] == "data"

    def test_determinism(self, client):
        payload = {"data": {"csv_text": CSV_SMALL}, "model": self.MODEL}
        a = client.post("/estimate", json=payload).text
        b = client.post("/estimate", json=payload).text
        assert a == b


class TestFigureAndDelta:
    def test_figure_self_correlation(self, client):
        resp = client.post("/figure", json={
            "data": {"csv_text": CSV_SMALL}, "x": "y", "y": "y"})
        fig = resp.json()["figure"]
        assert fig["pearson"] == pytest.approx(1.0, abs=1e-12)
        assert fig["r_squared"] == pytest.approx(1.0, abs=1e-9)
        assert len(fig["rows"]) == 20

    def test_delta_zero_when_same_period(self, client):
        resp = client.post("/delta", json={
            "data": {"csv_text": CSV_SMALL}, "variable": "y",
            "period_from": 2002, "period_to": 2002})
        delta = resp.json()["delta"]
        assert all(row["delta"] == 0.0 for row in delta["deltas"])

    def test_delta_sorted_descending(self, client):
        resp = client.post("/delta", json={
            "data": {"csv_text": CSV_SMALL}, "variable": "y",
            "period_from": 2001, "period_to": 2004})
        values = [row["delta"] for row in resp.json()["delta"]["deltas"]]
        assert values == sorted(values, reverse=True)

    def test_delta_out_of_range_period(self, client):
        resp = client.post("/delta", json={
            "data": {"csv_text": CSV_SMALL}, "variable": "y",
            "period_from": 1999, "period_to": 2004})
        assert resp.status_code == 422
        assert resp.json()["family"] == "data"


class TestUnitRootEndpoint:
    def test_batteries_for_requested_variables(self, client):
        resp = client.post("/unit-root", json={
            "data": {"csv_text": CSV_SMALL}, "variables": ["y"]})
        assert resp.status_code == 200
        block = resp.json()["unit_root"]["y"]
        assert len(block["results"]) == 12
        assert block["decision"] in ("stationary", "non_stationary")
        assert block["votes_stationary"] == sum(
            1 for r in block["results"] if r["rejects"])


class TestDiagnoseEndpoint:
    MODEL = {"dependent": "y", "regressors": ["x", "z"]}

    def test_diagnose_blocks(self, client):
        resp = client.post("/diagnose", json={
            "data": {"csv_text": CSV_SMALL},
            "model": self.MODEL,
            "diagnostics": {"dw_bounds": [1.0, 1.2]},
        })
        assert resp.status_code == 200, resp.text
        body = resp.json()
        diag = body["diagnostics"]
        assert {"jarque_bera", "dw", "bpg", "csd", "correlations", "klein"} <= set(diag)
        assert diag["dw"]["dl"] == 1.0
        assert diag["bpg"]["dof"] == 2  # regressors excluding the constant
        assert body["estimation"]["columns"] == ["x", "z", "C"]

    def test_snapshot_report_endpoint(self, client):
        resp = client.post("/report", json={
            "data": {"path": str(SNAPSHOT)},
            "model": {"dependent": "povertyrate",
                      "regressors": ["inworkpovertyrate", "socialexp",
                                     "NEETsrates"],
                      "sample": [2010, 2016]},
            "diagnostics": {"dw_bounds": {"dl": 1.73445, "du": 1.79688}},
        })
        assert resp.status_code == 200, resp.text
        body = resp.json()
        assert "Dependent Variable: POVERTYRATE" in body["text"]
        assert body["report"]["diagnostics"]["dw"]["decision"] == "no_autocorrelation"
        from panelgls.report import render_text
        assert render_text(body["report"]) == body["text"]
