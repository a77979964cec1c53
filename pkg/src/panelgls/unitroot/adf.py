"""Augmented Dickey-Fuller regression and Schwarz-criterion lag selection."""

from __future__ import annotations

import math

import numpy as np

from ..errors import Collinear, InsufficientObservations, PerfectFit
from ..linreg import RegressionFit, ols_fit

DeterministicSpec = str  # one of "trend_and_constant", "constant_only", "none"

SPEC_SHORT = {"trend_and_constant": "ct", "constant_only": "c", "none": "n"}
SPEC_LONG = {v: k for k, v in SPEC_SHORT.items()}
ALL_SPECS = ("trend_and_constant", "constant_only", "none")


def spec_short(spec: str) -> str:
    """Normalize a deterministic spec to its short code ('ct'/'c'/'n')."""
    if spec in SPEC_SHORT:
        return SPEC_SHORT[spec]
    if spec in SPEC_LONG:
        return spec
    raise ValueError(f"unknown deterministic spec {spec!r}")


def spec_long(spec: str) -> str:
    """Normalize a deterministic spec to its long name."""
    return SPEC_LONG[spec_short(spec)]


def n_deterministic(spec: str) -> int:
    return {"ct": 2, "c": 1, "n": 0}[spec_short(spec)]


def default_max_lag(t: int) -> int:
    """floor(12 (T/100)^(1/4)) capped so that max_lag < T/3."""
    schwert = int(math.floor(12.0 * (t / 100.0) ** 0.25))
    guard = int(math.ceil(t / 3.0)) - 1
    return max(0, min(schwert, guard))


def max_lag_with_df(t: int, spec: str, min_df: int) -> int:
    """Largest lag leaving at least `min_df` residual degrees of freedom."""
    det = n_deterministic(spec)
    return (t - 2 - det - min_df) // 2


def _adf_design(series: np.ndarray, lags: int, spec: str,
                align_to: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Dependent Delta-y and design [y_{t-1}, dy lags..., const, trend].

    `align_to` trims the sample as if `align_to` lags were used, so lag
    candidates share an identical estimation sample.
    """
    y = np.asarray(series, dtype=float).ravel()
    t = y.size
    start = (align_to if align_to is not None else lags) + 1
    rows = t - 1 - (start - 1)  # observations t = start+1 .. T (1-based)
    if rows < 1:
        raise InsufficientObservations(
            f"series of length {t} leaves no rows for {lags} lags"
        )
    dy = np.diff(y)
    lhs = dy[start - 1:]
    cols = [y[start - 1:-1]]
    for lag in range(1, lags + 1):
        cols.append(dy[start - 1 - lag:-lag])
    code = spec_short(spec)
    if code in ("c", "ct"):
        cols.append(np.ones(rows))
    if code == "ct":
        cols.append(np.arange(start + 1, t + 1, dtype=float))
    return lhs, np.column_stack(cols)


def adf_regression(series: np.ndarray, lags: int, spec: str,
                   align_to: int | None = None) -> tuple[float, RegressionFit]:
    """Dickey-Fuller regression of Delta-y on the lagged level.

    Returns the tau statistic (the t-ratio on y_{t-1}) and the full fit.
    Raises PerfectFit when the regression fits exactly (tau undefined) and
    InsufficientObservations when the sample cannot support the design.
    """
    lhs, design = _adf_design(series, lags, spec, align_to=align_to)
    n, k = lhs.size, design.shape[1]
    if n <= k:
        raise InsufficientObservations(
            f"ADF with {lags} lags and spec {spec!r} needs more than {k} "
            f"observations, have {n}"
        )
    code = spec_short(spec)
    try:
        fit = ols_fit(lhs, design, has_constant=code in ("c", "ct"))
    except Collinear:
        # A deterministic series makes the level column collinear with the
        # trend terms while fitting exactly; report that as PerfectFit.
        probe = np.linalg.lstsq(design, lhs, rcond=None)[0]
        if np.allclose(design @ probe, lhs, atol=1e-10):
            raise PerfectFit(
                "ADF regression fits exactly; tau is undefined"
            ) from None
        raise
    if fit.stats.ssr == 0.0:
        raise PerfectFit("ADF regression fits exactly; tau is undefined")
    return float(fit.t_stats[0]), fit


def select_lag_sic(series: np.ndarray, max_lag: int, spec: str) -> int:
    """Lag order minimizing the Schwarz criterion over 0..max_lag.

    All candidates are evaluated on the common sample implied by `max_lag`
    so their criteria are comparable; ties break toward the smaller lag.
    Candidates whose design cannot be estimated on that sample are skipped.
    """
    y = np.asarray(series, dtype=float).ravel()
    t = y.size
    if max_lag < 0:
        raise ValueError("max_lag must be non-negative")
    if max_lag >= t / 3.0:
        raise InsufficientObservations(
            f"max_lag {max_lag} too large for series of length {t} (need < T/3)"
        )
    best_lag: int | None = None
    best_sic = math.inf
    for p in range(max_lag + 1):
        try:
            _, fit = adf_regression(y, p, spec, align_to=max_lag)
        except (InsufficientObservations, PerfectFit):
            continue
        sic = fit.stats.sic
        if sic < best_sic - 1e-12:
            best_sic = sic
            best_lag = p
    if best_lag is None:
        raise InsufficientObservations(
            f"no feasible lag candidate for series of length {t} with spec {spec!r}"
        )
    return best_lag
