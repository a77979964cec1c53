import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from panelgls.cli import main
from panelgls.report import render_text

from conftest import SNAPSHOT

MODEL_BLOCK = {
    "dependent": "povertyrate",
    "regressors": ["inworkpovertyrate", "socialexp", "NEETsrates"],
    "include_constant": True,
    "sample": [2010, 2016],
}


@pytest.fixture()
def config_file(tmp_path):
    cfg = {
        "data": str(SNAPSHOT),
        "schema": {"unit": "geo", "period": "time",
                   "variable": "variable", "value": "value"},
        "model": MODEL_BLOCK,
        "unit_root": {"vote_threshold": 7},
        "egls": {"cov_divisor": "n", "pcse_df_corrected": True},
        "diagnostics": {"dw_bounds": {"dl": 1.73445, "du": 1.79688},
                        "bpg_residuals": "raw", "klein_rule": "r2"},
        "output": "text",
    }
    path = tmp_path / "run.json"
    path.write_text(json.dumps(cfg))
    return path


def invoke(*args):
    return CliRunner().invoke(main, [str(a) for a in args])


class TestIngest:
    def test_validate_text(self, config_file):
        result = invoke("ingest", "--validate", "--config", config_file)
        assert result.exit_code == 0, result.output
        assert "units: 28" in result.output
        assert "balanced: yes" in result.output

    def test_validate_json(self, config_file):
        result = invoke("ingest", "--config", config_file, "--emit", "json")
        assert result.exit_code == 0
        body = json.loads(result.output)
        assert body["n_obs"] == 196

    def test_missing_config_is_exit_2(self):
        result = invoke("ingest", "--config", "/nonexistent.json")
        assert result.exit_code == 2

    def test_unknown_variable_is_exit_3(self, tmp_path, config_file):
        cfg = json.loads(Path(config_file).read_text())
        cfg["model"]["dependent"] = "missing_variable"
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(cfg))
        result = invoke("estimate", "--config", bad)
        assert result.exit_code == 3


class TestEstimate:
    def test_text_table(self, config_file):
        result = invoke("estimate", "--config", config_file)
        assert result.exit_code == 0, result.output
        assert "Dependent Variable: POVERTYRATE" in result.output
        assert "Method: Panel EGLS (Period SUR)" in result.output
        assert "Total panel (balanced) observations: 196" in result.output
        assert "Weighted Statistics" in result.output
        assert "Unweighted Statistics" in result.output

    def test_json_contains_full_precision(self, config_file):
        result = invoke("estimate", "--config", config_file, "--emit", "json")
        body = json.loads(result.output)
        est = body["estimation"]
        assert len(est["coefficients"]) == 4
        assert isinstance(est["weighted"]["r_squared"], float)


class TestReport:
    def test_full_report_runs(self, config_file, tmp_path):
        out = tmp_path / "report.txt"
        result = invoke("report", "--config", config_file, "--out", out)
        assert result.exit_code == 0, result.output
        text = out.read_text()
        assert "UNIT ROOT BATTERY: POVERTYRATE" in text
        assert "ESTIMATION" in text
        assert "RESIDUAL DIAGNOSTICS" in text

    def test_json_text_round_trip(self, config_file):
        text_run = invoke("report", "--config", config_file, "--emit", "text")
        json_run = invoke("report", "--config", config_file, "--emit", "json")
        assert text_run.exit_code == 0 and json_run.exit_code == 0
        body = json.loads(json_run.output)
        assert render_text(body) == text_run.output

    def test_report_deterministic(self, config_file):
        first = invoke("report", "--config", config_file, "--emit", "json")
        second = invoke("report", "--config", config_file, "--emit", "json")
        assert first.output == second.output


class TestFigureDelta:
    def test_figure_csv(self, config_file):
        result = invoke("figure", "--x", "povertyrate", "--y",
                        "inworkpovertyrate", "--config", config_file,
                        "--emit", "csv")
        assert result.exit_code == 0, result.output
        lines = result.output.strip().splitlines()
        assert lines[0] == "unit,period,x,y"
        assert len(lines) == 1 + 196 + 1  # header, rows, summary

    def test_delta_csv(self, config_file):
        result = invoke("delta", "--var", "povertyrate", "--from", 2010,
                        "--to", 2016, "--config", config_file, "--emit", "csv")
        assert result.exit_code == 0, result.output
        lines = result.output.strip().splitlines()
        assert lines[0] == "unit,delta"
        assert len(lines) == 29

    def test_delta_same_period_zero(self, config_file):
        result = invoke("delta", "--var", "povertyrate", "--from", 2013,
                        "--to", 2013, "--config", config_file, "--emit", "json")
        body = json.loads(result.output)
        assert all(r["delta"] == 0.0 for r in body["delta"]["deltas"])


class TestUnitRootDiagnoseCommands:
    def test_unit_root_text_table(self, config_file):
        result = invoke("unit-root", "--var", "povertyrate",
                        "--config", config_file)
        assert result.exit_code == 0, result.output
        assert "UNIT ROOT BATTERY: POVERTYRATE" in result.output
        assert "Votes for stationarity:" in result.output
        assert "Decision: stationary" in result.output

    def test_unit_root_json_carries_all_results(self, config_file):
        result = invoke("unit-root", "--var", "povertyrate",
                        "--config", config_file, "--emit", "json")
        body = json.loads(result.output)
        block = body["unit_root"]["povertyrate"]
        assert len(block["results"]) == 12
        assert block["votes_stationary"] >= 7

    def test_diagnose_text(self, config_file):
        result = invoke("diagnose", "--config", config_file)
        assert result.exit_code == 0, result.output
        assert "RESIDUAL DIAGNOSTICS" in result.output
        assert "Jarque-Bera" in result.output
        assert "Breusch-Pagan LM" in result.output
        assert "Klein criterion: respected" in result.output

    def test_csv_emit_on_estimate_is_config_error(self, config_file):
        result = invoke("estimate", "--config", config_file, "--emit", "csv")
        assert result.exit_code == 2
