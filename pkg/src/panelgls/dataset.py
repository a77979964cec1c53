"""Balanced-panel data model and CSV ingestion.

The canonical input is a long-format CSV (`geo,time,variable,value`), the
shape of Eurostat bulk exports. Wide files (one column per period) are
normalized on load. Values must use `.` as the decimal separator; the
Eurostat missing markers (`:` or an empty cell) are treated as missing and
reported as a balance violation — the estimators in this package require a
fully balanced panel, so nothing is imputed.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    DuplicateObservation,
    EmptyWindow,
    UnbalancedPanel,
    UnknownVariable,
)

_MISSING_MARKERS = {"", ":", "na", "n/a", "nan"}


@dataclass(frozen=True)
class CsvSchema:
    """Column-role mapping for panel CSV files.

    `unit` and `period` name the cross-section and period columns. For the
    canonical long format, `variable` and `value` name the melt columns.
    If `value` is None every remaining column is read as one variable
    (multi-column long format); if `period` is None the file is wide with
    one column per period and `variable` labelling rows.
    """

    unit: str = "geo"
    period: str | None = "time"
    variable: str | None = "variable"
    value: str | None = "value"


@dataclass(frozen=True)
class PanelDataset:
    """An immutable balanced panel: N units x T periods per variable."""

    cross_section_ids: tuple[str, ...]
    period_ids: tuple[int, ...]
    variables: Mapping[str, np.ndarray]

    def __post_init__(self):
        n, t = self.n_units, self.n_periods
        if len(set(self.cross_section_ids)) != n:
            raise UnbalancedPanel("cross-section ids are not unique")
        if list(self.period_ids) != sorted(set(self.period_ids)):
            raise UnbalancedPanel("period ids must be strictly increasing")
        for name, matrix in self.variables.items():
            if matrix.shape != (n, t):
                raise UnbalancedPanel(
                    f"variable {name!r} has shape {matrix.shape}, expected {(n, t)}"
                )
            if not np.all(np.isfinite(matrix)):
                i, j = np.argwhere(~np.isfinite(matrix))[0]
                raise UnbalancedPanel(
                    f"non-finite value for ({self.cross_section_ids[i]}, "
                    f"{self.period_ids[j]}, {name})",
                    unit=self.cross_section_ids[i],
                    period=self.period_ids[j],
                    variable=name,
                )
            matrix.setflags(write=False)

    @property
    def n_units(self) -> int:
        return len(self.cross_section_ids)

    @property
    def n_periods(self) -> int:
        return len(self.period_ids)

    @property
    def n_obs(self) -> int:
        return self.n_units * self.n_periods

    def variable_names(self) -> tuple[str, ...]:
        return tuple(self.variables.keys())

    def matrix(self, name: str) -> np.ndarray:
        """N x T value matrix for one variable."""
        try:
            return self.variables[name]
        except KeyError:
            raise UnknownVariable(f"unknown variable {name!r}") from None

    def stacked(self, name: str) -> np.ndarray:
        """Unit-major, period-minor stacking of one variable (length N*T)."""
        return self.matrix(name).ravel()

    def period_index(self, period: int) -> int:
        try:
            return self.period_ids.index(period)
        except ValueError:
            raise EmptyWindow(f"period {period} not in dataset") from None

    def value(self, unit: str, period: int, name: str) -> float:
        i = self.cross_section_ids.index(unit)
        return float(self.matrix(name)[i, self.period_index(period)])


def subset(ds: PanelDataset, names: Sequence[str],
           window: tuple[int, int] | None = None) -> PanelDataset:
    """Balanced sub-panel restricted to `names` and the period `window`.

    Idempotent: subsetting twice with the same arguments is a no-op.
    """
    for name in names:
        if name not in ds.variables:
            raise UnknownVariable(f"unknown variable {name!r}")
    if window is None:
        window = (ds.period_ids[0], ds.period_ids[-1])
    first, last = window
    keep = [j for j, p in enumerate(ds.period_ids) if first <= p <= last]
    if not keep:
        raise EmptyWindow(f"window {first}..{last} contains no dataset periods")
    periods = tuple(ds.period_ids[j] for j in keep)
    variables = {
        name: np.array(ds.matrix(name)[:, keep], dtype=float, copy=True)
        for name in names
    }
    return PanelDataset(ds.cross_section_ids, periods, variables)


@dataclass(frozen=True)
class ModelSpec:
    """Dependent variable, ordered regressors, constant flag, sample window."""

    dependent: str
    regressors: tuple[str, ...]
    include_constant: bool = True
    sample: tuple[int, int] | None = None

    def __post_init__(self):
        regs = tuple(self.regressors)
        object.__setattr__(self, "regressors", regs)
        if self.dependent in regs:
            raise UnknownVariable(
                f"dependent {self.dependent!r} cannot appear among regressors"
            )
        if len(set(regs)) != len(regs):
            raise UnknownVariable("regressor names must be distinct")

    def validate_against(self, ds: PanelDataset) -> None:
        for name in (self.dependent, *self.regressors):
            if name not in ds.variables:
                raise UnknownVariable(f"unknown variable {name!r}")
        if self.sample is not None:
            first, last = self.sample
            if first > last:
                raise EmptyWindow(f"sample {first}..{last} is empty")
            if first not in ds.period_ids or last not in ds.period_ids:
                raise EmptyWindow(
                    f"sample {first}..{last} outside dataset periods "
                    f"{ds.period_ids[0]}..{ds.period_ids[-1]}"
                )


def _parse_value(raw: str, unit: str, period: int, variable: str) -> float:
    text = raw.strip()
    if text.lower() in _MISSING_MARKERS:
        raise UnbalancedPanel(
            f"missing value for ({unit}, {period}, {variable})",
            unit=unit, period=period, variable=variable,
        )
    try:
        return float(text)
    except ValueError:
        raise UnbalancedPanel(
            f"non-numeric value {raw!r} for ({unit}, {period}, {variable})",
            unit=unit, period=period, variable=variable,
        ) from None


def _parse_period(raw: str) -> int:
    try:
        return int(str(raw).strip())
    except ValueError:
        raise UnbalancedPanel(
            f"period {raw!r} is not an integer year"
        ) from None


def load_panel_csv(path: str | Path, schema: CsvSchema | None = None) -> PanelDataset:
    """Load and validate a balanced panel from a CSV file.

    Row order in the file never matters: units are ordered lexicographically
    and periods ascending, so any permutation of the input rows produces an
    identical dataset.
    """
    schema = schema or CsvSchema()
    path = Path(path)
    cells: dict[tuple[str, int, str], float] = {}

    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise UnbalancedPanel(f"{path}: empty file, header row required")
        header = [h.strip() for h in reader.fieldnames]
        if schema.unit not in header:
            raise UnbalancedPanel(f"{path}: missing unit column {schema.unit!r}")

        long_canonical = (schema.period in header and schema.variable in header
                          and schema.value in header)
        wide = (not long_canonical and schema.variable in header
                and (schema.period is None or schema.period not in header))
        if wide:
            period_cols = [h for h in header if h not in (schema.unit, schema.variable)]
            wide_periods = [_parse_period(h) for h in period_cols]
        elif not long_canonical:
            # multi-column long: every non-role column is a variable
            if schema.period not in header:
                raise UnbalancedPanel(f"{path}: missing period column {schema.period!r}")
            value_cols = [h for h in header if h not in (schema.unit, schema.period)]
            if not value_cols:
                raise UnbalancedPanel(f"{path}: no value columns found")

        for row in reader:
            row = {(k.strip() if k else k): v for k, v in row.items()}
            unit = str(row[schema.unit]).strip()
            if wide:
                variable = str(row[schema.variable]).strip()
                for col, period in zip(period_cols, wide_periods):
                    _store(cells, unit, period, variable,
                           _parse_value(row[col] or "", unit, period, variable))
            elif long_canonical:
                period = _parse_period(row[schema.period])
                variable = str(row[schema.variable]).strip()
                _store(cells, unit, period, variable,
                       _parse_value(row[schema.value] or "", unit, period, variable))
            else:
                period = _parse_period(row[schema.period])
                for col in value_cols:
                    _store(cells, unit, period, col,
                           _parse_value(row[col] or "", unit, period, col))

    if not cells:
        raise UnbalancedPanel(f"{path}: no observations found")

    units = tuple(sorted({key[0] for key in cells}))
    periods = tuple(sorted({key[1] for key in cells}))
    variables = tuple(sorted({key[2] for key in cells}))

    matrices: dict[str, np.ndarray] = {}
    for variable in variables:
        matrix = np.empty((len(units), len(periods)), dtype=float)
        for i, unit in enumerate(units):
            for j, period in enumerate(periods):
                try:
                    matrix[i, j] = cells[(unit, period, variable)]
                except KeyError:
                    raise UnbalancedPanel(
                        f"missing observation for ({unit}, {period}, {variable})",
                        unit=unit, period=period, variable=variable,
                    ) from None
        matrices[variable] = matrix
    return PanelDataset(units, periods, matrices)


def _store(cells: dict[tuple[str, int, str], float], unit: str, period: int,
           variable: str, value: float) -> None:
    key = (unit, period, variable)
    if key in cells:
        raise DuplicateObservation(
            f"duplicate observation for ({unit}, {period}, {variable})",
            unit=unit, period=period, variable=variable,
        )
    cells[key] = value


def design_matrices(ds: PanelDataset, spec: ModelSpec) -> tuple[np.ndarray, np.ndarray, tuple[str, ...]]:
    """Stacked (y, X, column names) for a model spec, constant last.

    Rows are stacked unit-major, period-minor over the spec's sample window.
    """
    spec.validate_against(ds)
    names = (spec.dependent, *spec.regressors)
    window = spec.sample or (ds.period_ids[0], ds.period_ids[-1])
    sub = subset(ds, list(names), window)
    y = sub.stacked(spec.dependent)
    columns = [sub.stacked(name) for name in spec.regressors]
    labels = list(spec.regressors)
    if spec.include_constant:
        columns.append(np.ones_like(y))
        labels.append("C")
    x = np.column_stack(columns)
    return y, x, tuple(labels)
