"""Pooled panel unit-root t* test (common autoregressive root).

Per unit: pick the lag order by the Schwarz criterion, partial the lagged
differences and deterministic terms out of both Delta-y and the lagged
level, and standardize the two residual series by the unit's regression
standard error. The pooled slope of the standardized residuals gives a
t-ratio whose mean and dispersion are re-centered with the per-(spec, T~)
adjustment constants and the per-unit ratio of long-run to innovation
standard deviation; the adjusted statistic is asymptotically standard
normal and the test rejects in the lower tail.
"""

from __future__ import annotations

import math

import numpy as np

from ..dists import normal_cdf
from ..errors import InsufficientObservations, PerfectFit
from .adf import (
    adf_regression,
    default_max_lag,
    max_lag_with_df,
    select_lag_sic,
    spec_short,
)
from .lrv import bartlett_long_run_variance, newey_west_bandwidth
from .moments import llc_adjustment


def _partial_out(target: np.ndarray, controls: np.ndarray | None) -> np.ndarray:
    if controls is None or controls.shape[1] == 0:
        return target
    coef, *_ = np.linalg.lstsq(controls, target, rcond=None)
    return target - controls @ coef


def _detrended_diff(dy: np.ndarray, code: str) -> np.ndarray:
    """Remove the deterministic component from Delta-y for the variance ratio."""
    if code == "n":
        return dy
    if code == "c":
        return dy - dy.mean()
    trend = np.arange(1, dy.size + 1, dtype=float)
    design = np.column_stack([np.ones(dy.size), trend])
    coef, *_ = np.linalg.lstsq(design, dy, rcond=None)
    return dy - design @ coef


def llc_statistic(panel: np.ndarray, spec: str,
                  max_lag: int | None = None) -> tuple[float, float]:
    """Adjusted pooled t* and its lower-tail normal p-value."""
    data = np.asarray(panel, dtype=float)
    if data.ndim != 2:
        raise ValueError("panel must be an N x T matrix")
    n_units, t = data.shape
    if n_units < 2:
        raise InsufficientObservations("panel tests need at least two units")
    code = spec_short(spec)
    # keep at least 3 residual df per unit so sigma_eps stays usable
    df_cap = max_lag_with_df(t, code, 3)
    if df_cap < 0:
        raise InsufficientObservations(
            f"series of length {t} too short for the pooled t* test with spec {code!r}"
        )
    cap = min(default_max_lag(t), df_cap)
    max_lag = cap if max_lag is None else min(max_lag, cap)

    e_all: list[np.ndarray] = []
    v_all: list[np.ndarray] = []
    ratios: list[float] = []
    lags_used: list[int] = []

    for i in range(n_units):
        y = data[i]
        p = select_lag_sic(y, max_lag, code)
        _, fit = adf_regression(y, p, code)
        sigma_eps = math.sqrt(fit.stats.ssr / fit.df_resid)
        if sigma_eps == 0.0:
            raise PerfectFit(f"unit {i} fits exactly; t* undefined")

        # rebuild the pieces of the ADF design to partial out controls
        dy = np.diff(y)
        start = p + 1
        lhs = dy[start - 1:]
        level = y[start - 1:-1]
        controls = []
        for lag in range(1, p + 1):
            controls.append(dy[start - 1 - lag:-lag])
        if code in ("c", "ct"):
            controls.append(np.ones(lhs.size))
        if code == "ct":
            controls.append(np.arange(start + 1, t + 1, dtype=float))
        w = np.column_stack(controls) if controls else None

        e_i = _partial_out(lhs, w) / sigma_eps
        v_i = _partial_out(level, w) / sigma_eps

        dy_det = _detrended_diff(dy, code)
        lrv = bartlett_long_run_variance(dy_det, newey_west_bandwidth(dy_det.size))
        lrv = max(lrv, 1e-12)
        ratios.append(math.sqrt(lrv) / sigma_eps)
        e_all.append(e_i)
        v_all.append(v_i)
        lags_used.append(p)

    e = np.concatenate(e_all)
    v = np.concatenate(v_all)
    total_obs = e.size
    t_bar = t - (sum(lags_used) / n_units) - 1.0  # average effective sample

    svv = float(v @ v)
    if svv <= 0.0:
        raise InsufficientObservations("degenerate pooled regressor")
    delta = float(v @ e) / svv
    rss = float(np.sum((e - delta * v) ** 2))
    sigma_tilde_sq = rss / total_obs
    se_delta = math.sqrt(sigma_tilde_sq / svv)
    t_delta = delta / se_delta

    s_bar = float(np.mean(ratios))
    mu_star, sigma_star = llc_adjustment(code, t_bar)
    correction = n_units * t_bar * s_bar * se_delta / sigma_tilde_sq
    t_star = (t_delta - correction * mu_star) / sigma_star
    return t_star, normal_cdf(t_star)
