"""FastAPI application exposing the estimation pipeline.

Every module error maps to a structured 422 body whose `family` field tells
clients which exit code to use (config -> 2, data -> 3, numeric -> 4).
Reports are deterministic: identical payloads produce identical bodies.
"""

from __future__ import annotations

import tempfile
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..dataset import CsvSchema, ModelSpec, PanelDataset, load_panel_csv
from ..egls import egls_fit
from ..errors import ConfigError, DataError, EngineError, NumericError
from ..pipeline import RunConfig, run_diagnostics, run_pipeline
from ..report import (
    delta_report,
    diagnostics_dict,
    estimation_dict,
    figure_data,
    render_text,
    unitroot_dict,
)
from ..unitroot import battery
from .schemas import (
    DataPayload,
    DeltaRequest,
    DiagnoseRequest,
    EstimateRequest,
    FigureRequest,
    ModelPayload,
    ReportRequest,
    ReportResponse,
    UnitRootRequest,
    ValidateRequest,
    ValidateResponse,
)


def _load(data: DataPayload) -> PanelDataset:
    schema = CsvSchema(
        unit=data.schema_map.unit,
        period=data.schema_map.period,
        variable=data.schema_map.variable,
        value=data.schema_map.value,
    )
    if data.path is not None:
        path = Path(data.path)
        if not path.exists():
            raise ConfigError(f"data file not found: {path}")
        return load_panel_csv(path, schema)
    with tempfile.NamedTemporaryFile("w", suffix=".csv", delete=False) as handle:
        handle.write(data.csv_text)
        tmp = Path(handle.name)
    try:
        return load_panel_csv(tmp, schema)
    finally:
        tmp.unlink(missing_ok=True)


def _model_spec(model: ModelPayload) -> ModelSpec:
    return ModelSpec(
        dependent=model.dependent,
        regressors=tuple(model.regressors),
        include_constant=model.include_constant,
        sample=model.sample,
    )


def _error_family(exc: EngineError) -> str:
    if isinstance(exc, ConfigError):
        return "config"
    if isinstance(exc, DataError):
        return "data"
    if isinstance(exc, NumericError):
        return "numeric"
    return "internal"


def create_app() -> FastAPI:
    app = FastAPI(title="panelgls", version=__version__)

    @app.exception_handler(EngineError)
    async def engine_error_handler(request: Request, exc: EngineError):
        return JSONResponse(
            status_code=422,
            content={
                "error": type(exc).__name__,
                "family": _error_family(exc),
                "message": str(exc),
            },
        )

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/ingest/validate", response_model=ValidateResponse)
    def ingest_validate(req: ValidateRequest):
        ds = _load(req.data)
        return ValidateResponse(
            n_units=ds.n_units,
            n_periods=ds.n_periods,
            n_obs=ds.n_obs,
            units=list(ds.cross_section_ids),
            periods=list(ds.period_ids),
            variables=list(ds.variable_names()),
        )

    @app.post("/unit-root")
    def unit_root(req: UnitRootRequest):
        ds = _load(req.data)
        names = req.variables or list(ds.variable_names())
        blocks = {}
        for name in names:
            blocks[name] = unitroot_dict(
                battery(ds.matrix(name), max_lag=req.max_lag,
                        vote_threshold=req.vote_threshold))
        return {"unit_root": blocks}

    @app.post("/estimate")
    def estimate(req: EstimateRequest):
        ds = _load(req.data)
        spec = _model_spec(req.model)
        fit = egls_fit(ds, spec, cov_divisor=req.options.cov_divisor,
                       pcse_df_corrected=req.options.pcse_df_corrected)
        return {"estimation": estimation_dict(fit, spec)}

    @app.post("/diagnose")
    def diagnose(req: DiagnoseRequest):
        ds = _load(req.data)
        spec = _model_spec(req.model)
        fit = egls_fit(ds, spec, cov_divisor=req.options.cov_divisor,
                       pcse_df_corrected=req.options.pcse_df_corrected)
        diag = run_diagnostics(
            ds, spec, fit,
            dw_override=req.diagnostics.dw_bounds,
            bpg_residuals=req.diagnostics.bpg_residuals,
            klein_rule=req.diagnostics.klein_rule,
            csd_demean=req.diagnostics.csd_demean,
        )
        return {
            "estimation": estimation_dict(fit, spec),
            "diagnostics": diagnostics_dict(diag),
        }

    @app.post("/report", response_model=ReportResponse)
    def report(req: ReportRequest):
        with tempfile.NamedTemporaryFile("w", suffix=".csv",
                                         delete=False) as handle:
            if req.data.csv_text is not None:
                handle.write(req.data.csv_text)
                data_path = handle.name
            else:
                data_path = req.data.path
        raw = {
            "data": data_path,
            "schema": req.data.schema_map.model_dump(),
            "model": req.model.model_dump(),
            "unit_root": req.unit_root,
            "egls": req.egls,
            "diagnostics": req.diagnostics,
        }
        try:
            config = RunConfig.from_dict(raw)
            body = run_pipeline(config)
        finally:
            if req.data.csv_text is not None:
                Path(data_path).unlink(missing_ok=True)
        return ReportResponse(report=body, text=render_text(body))

    @app.post("/figure")
    def figure(req: FigureRequest):
        ds = _load(req.data)
        return {"figure": figure_data(ds, req.x, req.y)}

    @app.post("/delta")
    def delta(req: DeltaRequest):
        ds = _load(req.data)
        return {"delta": delta_report(ds, req.variable, req.period_from,
                                      req.period_to)}

    return app


app = create_app()
