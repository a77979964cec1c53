"""Phillips-Perron Z-tau test for a single series."""

from __future__ import annotations

import math

import numpy as np

from ..errors import InsufficientObservations
from ..linreg import ols_fit
from .adf import spec_short
from .lrv import bartlett_long_run_variance, newey_west_bandwidth
from .mackinnon import mackinnon_p
from .moments import standardize_zt


def pp_statistic(series: np.ndarray, spec: str) -> tuple[float, float]:
    """Z-tau statistic and its response-surface p-value.

    Levels regression y_t on [y_{t-1}, deterministics]; serial correlation
    in the errors enters through the Bartlett long-run variance with the
    automatic floor(4 (T/100)^(2/9)) bandwidth. The p-value comes from the
    response surface after a finite-sample moment standardization of Z-tau.
    """
    y = np.asarray(series, dtype=float).ravel()
    t = y.size
    if t < 10:
        raise InsufficientObservations(
            f"Phillips-Perron needs at least 10 observations, got {t}"
        )
    code = spec_short(spec)
    n = t - 1
    cols = [y[:-1]]
    if code in ("c", "ct"):
        cols.append(np.ones(n))
    if code == "ct":
        cols.append(np.arange(2, t + 1, dtype=float))
    design = np.column_stack(cols)
    fit = ols_fit(y[1:], design, has_constant=code in ("c", "ct"))
    k = design.shape[1]
    u = fit.residuals

    s2 = fit.stats.ssr / (n - k)
    gamma0 = fit.stats.ssr / n
    lam2 = bartlett_long_run_variance(u, newey_west_bandwidth(t))
    if lam2 <= 0.0:
        lam2 = gamma0
    rho = float(fit.coefficients[0])
    se_rho = float(fit.std_errors[0])
    t_rho = (rho - 1.0) / se_rho
    z_tau = (math.sqrt(gamma0 / lam2) * t_rho
             - 0.5 * (lam2 - gamma0) / math.sqrt(lam2)
             * n * se_rho / math.sqrt(s2))
    return z_tau, mackinnon_p(standardize_zt(z_tau, code, t), code)


def pp_single(series: np.ndarray, spec: str) -> float:
    """P-value of the Phillips-Perron Z-tau test."""
    return pp_statistic(series, spec)[1]
