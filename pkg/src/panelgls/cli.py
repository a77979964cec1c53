"""Command-line client for the estimation service.

Every subcommand is a thin wrapper over one service endpoint. By default the
requests run against an in-process application instance, so batch usage
needs no running server; `--server URL` routes the same requests to a remote
instance instead (data is then sent inline rather than by path).

Exit codes: 0 success, 2 configuration error, 3 data error, 4 numeric error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any

import click

from .errors import ConfigError
from .report import render_csv, render_text

_EXIT_BY_FAMILY = {"config": 2, "data": 3, "numeric": 4, "internal": 4}


class ServiceClient:
    """HTTP client over either a remote server or the in-process app."""

    def __init__(self, server: str | None = None):
        self.remote = server is not None
        if server is not None:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=300.0)
        else:
            from fastapi.testclient import TestClient

            from .service import create_app

            self._client = TestClient(create_app())

    def post(self, path: str, payload: dict[str, Any]) -> dict[str, Any]:
        response = self._client.post(path, json=payload)
        body = response.json()
        if response.status_code != 200:
            raise ServiceFailure(body)
        return body


class ServiceFailure(Exception):
    def __init__(self, body: dict[str, Any]):
        self.body = body if isinstance(body, dict) else {"message": str(body)}
        super().__init__(self.body.get("message", "service error"))

    @property
    def exit_code(self) -> int:
        return _EXIT_BY_FAMILY.get(self.body.get("family", "internal"), 4)


def _read_config(config_path: str | None) -> dict[str, Any]:
    if config_path is None:
        raise ConfigError("--config PATH is required")
    path = Path(config_path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    raw.setdefault("schema", {})
    if "data" in raw and not Path(raw["data"]).is_absolute():
        raw["data"] = str((path.parent / raw["data"]).resolve())
    return raw


def _data_payload(raw: dict[str, Any], client: ServiceClient) -> dict[str, Any]:
    if "data" not in raw:
        raise ConfigError("config requires a 'data' path")
    payload: dict[str, Any] = {"schema": raw.get("schema", {})}
    if client.remote:
        data_path = Path(raw["data"])
        if not data_path.exists():
            raise ConfigError(f"data file not found: {data_path}")
        payload["csv_text"] = data_path.read_text()
    else:
        payload["path"] = raw["data"]
    return payload


def _emit(body: dict[str, Any], emit: str, out: str | None) -> None:
    if emit == "json":
        text = json.dumps(body, sort_keys=True, indent=2) + "\n"
    elif emit == "csv":
        text = render_csv(body)
    else:
        text = render_text(body)
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _fail(exc: Exception, code: int) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(code)


def _run(fn) -> None:
    try:
        fn()
    except ServiceFailure as exc:
        click.echo(f"error: {exc.body.get('error', 'ServiceError')}: "
                   f"{exc.body.get('message', '')}", err=True)
        sys.exit(exc.exit_code)
    except ConfigError as exc:
        _fail(exc, 2)


_CONFIG_OPT = click.option("--config", "config_path", type=str, default=None,
                           help="JSON run configuration")
_EMIT_OPT = click.option("--emit", type=click.Choice(["text", "json", "csv"]),
                         default=None, help="output format")
_OUT_OPT = click.option("--out", type=str, default=None, help="output file")
_SERVER_OPT = click.option("--server", type=str, default=None,
                           help="remote service URL (default: in-process)")


@click.group()
def main():
    """Balanced-panel estimation toolkit."""


@main.command("ingest")
@click.option("--validate", is_flag=True, default=True,
              help="validate balance and report dataset shape")
@_CONFIG_OPT
@_EMIT_OPT
@_OUT_OPT
@_SERVER_OPT
def ingest_cmd(validate, config_path, emit, out, server):
    """Load the panel CSV and verify it is balanced."""
    def go():
        raw = _read_config(config_path)
        client = ServiceClient(server)
        body = client.post("/ingest/validate", {"data": _data_payload(raw, client)})
        emit_fmt = emit or raw.get("output", "text")
        if emit_fmt == "json":
            _emit(body, "json", out)
        else:
            lines = [
                f"units: {body['n_units']}",
                f"periods: {body['n_periods']}",
                f"observations per variable: {body['n_obs']}",
                f"variables: {', '.join(body['variables'])}",
                "balanced: yes",
            ]
            text = "\n".join(lines) + "\n"
            Path(out).write_text(text) if out else click.echo(text, nl=False)
    _run(go)


@main.command("unit-root")
@click.option("--var", "variables", multiple=True,
              help="variable to test (repeatable; default: model variables)")
@_CONFIG_OPT
@_EMIT_OPT
@_OUT_OPT
@_SERVER_OPT
def unit_root_cmd(variables, config_path, emit, out, server):
    """Run the 12-test stationarity battery per variable."""
    def go():
        raw = _read_config(config_path)
        client = ServiceClient(server)
        names = list(variables)
        if not names:
            model = raw.get("model", {})
            names = [model.get("dependent"), *model.get("regressors", [])]
            names = [n for n in names if n]
        unit_root = raw.get("unit_root", {})
        payload = {
            "data": _data_payload(raw, client),
            "variables": names or None,
            "max_lag": unit_root.get("max_lag"),
            "vote_threshold": unit_root.get("vote_threshold", 7),
        }
        body = client.post("/unit-root", payload)
        _emit(body, emit or raw.get("output", "text"), out)
    _run(go)


def _model_payload(raw: dict[str, Any]) -> dict[str, Any]:
    try:
        model = raw["model"]
    except KeyError:
        raise ConfigError("config requires a 'model' block") from None
    return {
        "dependent": model["dependent"],
        "regressors": list(model["regressors"]),
        "include_constant": model.get("include_constant", True),
        "sample": model.get("sample"),
    }


@main.command("estimate")
@_CONFIG_OPT
@_EMIT_OPT
@_OUT_OPT
@_SERVER_OPT
def estimate_cmd(config_path, emit, out, server):
    """Two-stage period-SUR EGLS estimation table."""
    def go():
        raw = _read_config(config_path)
        client = ServiceClient(server)
        payload = {
            "data": _data_payload(raw, client),
            "model": _model_payload(raw),
            "options": raw.get("egls", {}),
        }
        body = client.post("/estimate", payload)
        _emit(body, emit or raw.get("output", "text"), out)
    _run(go)


@main.command("diagnose")
@_CONFIG_OPT
@_EMIT_OPT
@_OUT_OPT
@_SERVER_OPT
def diagnose_cmd(config_path, emit, out, server):
    """Residual diagnostics for the estimated model."""
    def go():
        raw = _read_config(config_path)
        client = ServiceClient(server)
        diag = dict(raw.get("diagnostics", {}))
        bounds = diag.pop("dw_bounds", None)
        if isinstance(bounds, dict):
            diag["dw_bounds"] = (bounds["dl"], bounds["du"])
        elif bounds not in (None, "auto"):
            raise ConfigError("dw_bounds must be 'auto' or {'dl':..., 'du':...}")
        payload = {
            "data": _data_payload(raw, client),
            "model": _model_payload(raw),
            "options": raw.get("egls", {}),
            "diagnostics": diag,
        }
        body = client.post("/diagnose", payload)
        _emit(body, emit or raw.get("output", "text"), out)
    _run(go)


@main.command("report")
@_CONFIG_OPT
@_EMIT_OPT
@_OUT_OPT
@_SERVER_OPT
def report_cmd(config_path, emit, out, server):
    """Full pipeline: ingest, unit roots, estimation, diagnostics."""
    def go():
        raw = _read_config(config_path)
        client = ServiceClient(server)
        payload = {
            "data": _data_payload(raw, client),
            "model": _model_payload(raw),
            "unit_root": raw.get("unit_root", {}),
            "egls": raw.get("egls", {}),
            "diagnostics": raw.get("diagnostics", {}),
        }
        body = client.post("/report", payload)
        emit_fmt = emit or raw.get("output", "text")
        if emit_fmt == "text":
            text = body["text"]
            Path(out).write_text(text) if out else click.echo(text, nl=False)
        else:
            _emit(body["report"], emit_fmt, out)
    _run(go)


@main.command("figure")
@click.option("--x", "x_var", required=True, help="x-axis variable")
@click.option("--y", "y_var", required=True, help="y-axis variable")
@_CONFIG_OPT
@_EMIT_OPT
@_OUT_OPT
@_SERVER_OPT
def figure_cmd(x_var, y_var, config_path, emit, out, server):
    """Per-observation scatter data with pooled correlation and R-squared."""
    def go():
        raw = _read_config(config_path)
        client = ServiceClient(server)
        payload = {"data": _data_payload(raw, client), "x": x_var, "y": y_var}
        body = client.post("/figure", payload)
        _emit(body, emit or raw.get("output", "csv"), out)
    _run(go)


@main.command("delta")
@click.option("--var", "variable", required=True, help="variable name")
@click.option("--from", "period_from", required=True, type=int,
              help="first period")
@click.option("--to", "period_to", required=True, type=int, help="last period")
@_CONFIG_OPT
@_EMIT_OPT
@_OUT_OPT
@_SERVER_OPT
def delta_cmd(variable, period_from, period_to, config_path, emit, out, server):
    """Per-unit percentage-point change between two periods."""
    def go():
        raw = _read_config(config_path)
        client = ServiceClient(server)
        payload = {
            "data": _data_payload(raw, client),
            "variable": variable,
            "period_from": period_from,
            "period_to": period_to,
        }
        body = client.post("/delta", payload)
        _emit(body, emit or raw.get("output", "csv"), out)
    _run(go)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve_cmd(host, port):
    """Run the HTTP service (requires uvicorn)."""
    try:
        import uvicorn
    except ImportError:
        _fail(ConfigError("uvicorn is not installed (pip install panelgls[server])"), 2)
        return
    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
