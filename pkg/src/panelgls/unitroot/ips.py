"""Heterogeneous-panel W-t-bar unit-root test (mean of per-unit tau stats).

Each unit gets its own Schwarz-selected lag and its own tau; the panel
statistic standardizes the cross-unit mean of the taus with tabulated
per-(T, lag) null moments and is asymptotically standard normal. The
alternative allows only some units to be stationary, so a rejection does
not claim stationarity of every unit.
"""

from __future__ import annotations

import math

import numpy as np

from ..dists import normal_cdf
from ..errors import InsufficientObservations, UnsupportedSampleSize
from .adf import (
    adf_regression,
    default_max_lag,
    max_lag_with_df,
    select_lag_sic,
    spec_short,
)
from .moments import selected_tau_moments


def ips_statistic(panel: np.ndarray, spec: str,
                  max_lag: int | None = None) -> tuple[float, float]:
    """W-t-bar statistic and its lower-tail normal p-value.

    Only the trend-and-constant and constant-only specifications are
    defined for this test.
    """
    code = spec_short(spec)
    if code == "n":
        raise ValueError("the W-t-bar test requires a constant (with or without trend)")
    data = np.asarray(panel, dtype=float)
    if data.ndim != 2:
        raise ValueError("panel must be an N x T matrix")
    n_units, t = data.shape
    if n_units < 2:
        raise InsufficientObservations("panel tests need at least two units")
    # restrict lag selection to orders whose tau variance is finite (and
    # therefore tabulated); tau moments do not exist below 3 residual df
    moment_cap = max_lag_with_df(t, code, 3)
    if moment_cap < 0:
        raise UnsupportedSampleSize(
            f"series of length {t} too short for the W-t-bar test with spec {code!r}"
        )
    cap = min(default_max_lag(t), moment_cap)
    max_lag = cap if max_lag is None else min(max_lag, cap)

    taus = []
    for i in range(n_units):
        y = data[i]
        p = select_lag_sic(y, max_lag, code)
        tau, _ = adf_regression(y, p, code)
        taus.append(tau)

    # null moments of the per-unit tau inclusive of the lag-selection step;
    # per-realized-lag moments would leave a selection bias in the mean
    e_bar, v_bar = selected_tau_moments(code, t)
    t_bar = float(np.mean(taus))
    w = math.sqrt(n_units) * (t_bar - e_bar) / math.sqrt(v_bar)
    return w, normal_cdf(w)
