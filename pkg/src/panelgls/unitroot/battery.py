"""Twelve-test stationarity battery with majority vote.

Five test families run across deterministic specifications in a fixed
order: pooled t* under all three, Breitung under trend-and-constant, W-t-bar
under the two specs with a constant, and the two Fisher chi-square
combinations (per-unit tau and per-unit Z-tau p-values) under all three.
A test that cannot run is kept in the report with its error message and
counts as a non-rejection. The panel is called stationary when a strict
majority of the twelve results rejects the unit-root null at 5%.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EngineError
from .adf import (
    ALL_SPECS,
    adf_regression,
    default_max_lag,
    max_lag_with_df,
    select_lag_sic,
    spec_short,
)
from .breitung import breitung_statistic
from .fisher import fisher_combine
from .ips import ips_statistic
from .llc import llc_statistic
from .mackinnon import mackinnon_p
from .moments import standardize_tau_selected
from .pp import pp_statistic

ALPHA = 0.05
_P_FLOOR = 1e-16  # response surfaces can return exact zeros


@dataclass(frozen=True)
class UnitRootResult:
    """One battery entry: a test statistic, its p-value and the 5% verdict."""

    test_name: str
    spec: str
    statistic: float
    p_value: float
    rejects_unit_root_at_5pct: bool
    error: str | None = None


@dataclass(frozen=True)
class UnitRootReport:
    """All twelve battery results plus the majority-vote decision."""

    results: tuple[UnitRootResult, ...]
    votes_stationary: int
    decision: str  # "stationary" | "non_stationary"
    vote_threshold: int

    def __post_init__(self):
        if len(self.results) != 12:
            raise ValueError(f"battery must contain 12 results, got {len(self.results)}")


def _result(name: str, spec: str, stat: float, p: float) -> UnitRootResult:
    return UnitRootResult(
        test_name=name,
        spec=spec,
        statistic=stat,
        p_value=p,
        rejects_unit_root_at_5pct=bool(p < ALPHA),
    )


def _errored(name: str, spec: str, exc: Exception) -> UnitRootResult:
    return UnitRootResult(
        test_name=name,
        spec=spec,
        statistic=float("nan"),
        p_value=float("nan"),
        rejects_unit_root_at_5pct=False,
        error=f"{type(exc).__name__}: {exc}",
    )


def _fisher_adf(panel: np.ndarray, spec: str, max_lag: int) -> tuple[float, float]:
    code = spec_short(spec)
    t = panel.shape[1]
    # keep lag orders inside the moment-tabulated range (>= 3 residual df)
    capped = min(max_lag, max(0, max_lag_with_df(t, code, 3)))
    p_values = []
    for row in panel:
        lag = select_lag_sic(row, capped, code)
        tau, _ = adf_regression(row, lag, code)
        adjusted = standardize_tau_selected(tau, code, t)
        p_values.append(max(mackinnon_p(adjusted, code), _P_FLOOR))
    stat, _, prob = fisher_combine(p_values)
    return stat, prob


def _fisher_pp(panel: np.ndarray, spec: str) -> tuple[float, float]:
    code = spec_short(spec)
    p_values = []
    for row in panel:
        _, p = pp_statistic(row, code)
        p_values.append(max(p, _P_FLOOR))
    stat, _, prob = fisher_combine(p_values)
    return stat, prob


def llc_test(panel: np.ndarray, spec: str,
             max_lag: int | None = None) -> UnitRootResult:
    """Pooled t* test as a battery-style result row."""
    stat, p = llc_statistic(panel, spec, max_lag)
    return _result("pooled_t_star", spec_short(spec) and spec, stat, p)


def breitung_test(panel: np.ndarray) -> UnitRootResult:
    """Breitung test (trend and constant) as a battery-style result row."""
    stat, p = breitung_statistic(panel)
    return _result("breitung", "trend_and_constant", stat, p)


def ips_test(panel: np.ndarray, spec: str,
             max_lag: int | None = None) -> UnitRootResult:
    """W-t-bar test as a battery-style result row."""
    stat, p = ips_statistic(panel, spec, max_lag)
    return _result("w_t_bar", spec_short(spec) and spec, stat, p)


def battery(panel: np.ndarray, max_lag: int | None = None,
            vote_threshold: int = 7) -> UnitRootReport:
    """Run the full battery on one N x T variable panel."""
    data = np.asarray(panel, dtype=float)
    if data.ndim != 2:
        raise ValueError("panel must be an N x T matrix")
    t = data.shape[1]
    cap = default_max_lag(t)
    lag_cap = cap if max_lag is None else max(0, min(max_lag, cap))

    results: list[UnitRootResult] = []

    def run(name: str, spec: str, fn) -> None:
        try:
            stat, p = fn()
            results.append(_result(name, spec, stat, p))
        except (EngineError, ValueError) as exc:
            results.append(_errored(name, spec, exc))

    for spec in ALL_SPECS:
        run("pooled_t_star", spec,
            lambda s=spec: llc_statistic(data, s, lag_cap))
    run("breitung", "trend_and_constant", lambda: breitung_statistic(data))
    for spec in ("trend_and_constant", "constant_only"):
        run("w_t_bar", spec, lambda s=spec: ips_statistic(data, s, lag_cap))
    for spec in ALL_SPECS:
        run("adf_fisher", spec, lambda s=spec: _fisher_adf(data, s, lag_cap))
    for spec in ALL_SPECS:
        run("pp_fisher", spec, lambda s=spec: _fisher_pp(data, s))

    votes = sum(r.rejects_unit_root_at_5pct for r in results)
    decision = "stationary" if votes >= vote_threshold else "non_stationary"
    return UnitRootReport(
        results=tuple(results),
        votes_stationary=votes,
        decision=decision,
        vote_threshold=vote_threshold,
    )
