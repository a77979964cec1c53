"""Pydantic request/response models for the estimation service."""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, model_validator


class SchemaModel(BaseModel):
    unit: str = "geo"
    period: Optional[str] = "time"
    variable: Optional[str] = "variable"
    value: Optional[str] = "value"


class DataPayload(BaseModel):
    """Panel data source: a server-local path or inline CSV text."""

    path: Optional[str] = None
    csv_text: Optional[str] = None
    schema_map: SchemaModel = Field(default_factory=SchemaModel, alias="schema")

    model_config = {"populate_by_name": True}

    @model_validator(mode="after")
    def _one_source(self):
        if (self.path is None) == (self.csv_text is None):
            raise ValueError("provide exactly one of 'path' or 'csv_text'")
        return self


class ModelPayload(BaseModel):
    dependent: str
    regressors: list[str]
    include_constant: bool = True
    sample: Optional[tuple[int, int]] = None


class ValidateRequest(BaseModel):
    data: DataPayload


class ValidateResponse(BaseModel):
    n_units: int
    n_periods: int
    n_obs: int
    units: list[str]
    periods: list[int]
    variables: list[str]
    balanced: bool = True


class UnitRootRequest(BaseModel):
    data: DataPayload
    variables: Optional[list[str]] = None
    max_lag: Optional[int] = None
    vote_threshold: int = 7


class EstimateOptions(BaseModel):
    cov_divisor: Literal["n", "n-1"] = "n"
    pcse_df_corrected: bool = True


class EstimateRequest(BaseModel):
    data: DataPayload
    model: ModelPayload
    options: EstimateOptions = Field(default_factory=EstimateOptions)


class DiagnosticsOptions(BaseModel):
    dw_bounds: Optional[tuple[float, float]] = None
    bpg_residuals: Literal["raw", "weighted"] = "raw"
    klein_rule: Literal["r2", "abs_r"] = "r2"
    csd_demean: bool = True


class DiagnoseRequest(BaseModel):
    data: DataPayload
    model: ModelPayload
    options: EstimateOptions = Field(default_factory=EstimateOptions)
    diagnostics: DiagnosticsOptions = Field(default_factory=DiagnosticsOptions)


class ReportRequest(BaseModel):
    """Full pipeline run; mirrors the JSON config file."""

    data: DataPayload
    model: ModelPayload
    unit_root: dict[str, Any] = Field(default_factory=dict)
    egls: dict[str, Any] = Field(default_factory=dict)
    diagnostics: dict[str, Any] = Field(default_factory=dict)


class ReportResponse(BaseModel):
    report: dict[str, Any]
    text: str


class FigureRequest(BaseModel):
    data: DataPayload
    x: str
    y: str


class DeltaRequest(BaseModel):
    data: DataPayload
    variable: str
    period_from: int
    period_to: int


class ErrorBody(BaseModel):
    error: str
    family: Literal["config", "data", "numeric", "internal"]
    message: str
