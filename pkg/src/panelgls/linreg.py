"""Pooled least-squares engine and the per-fit statistics block.

The solver goes through a QR decomposition rather than explicit normal
equations; rank problems are detected on the R factor. Statistic formulas
follow the standard econometrics-package conventions: centered total sum of
squares whenever a constant is present, F recomputed from R-squared, and
per-observation information criteria.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dists import f_upper_tail, t_two_tailed_prob
from .errors import (
    Collinear,
    DegenerateSample,
    InsufficientObservations,
    PerfectFit,
)

_RANK_TOL = 1e-10
_SSR_ZERO_REL = 1e-20  # below this (relative to y'y) a fit counts as exact


def _snap_ssr(ssr: float, scale: float) -> float:
    return 0.0 if ssr <= _SSR_ZERO_REL * max(1.0, scale) else ssr


@dataclass(frozen=True)
class StatBlock:
    """Summary statistics attached to a regression fit."""

    r_squared: float
    adj_r_squared: float
    se_regression: float
    ssr: float
    log_likelihood: float
    f_stat: float
    f_prob: float
    durbin_watson: float
    mean_dep: float
    sd_dep: float
    aic: float
    sic: float
    hq: float


@dataclass(frozen=True)
class RegressionFit:
    """A completed least-squares fit.

    Coefficient order is the design-matrix column order; by package
    convention callers place the constant in the last column so printed
    tables list slopes first and the intercept last. `residuals` are stored
    in the row order of the design (for panels: unit-major, period-minor).
    """

    coefficients: np.ndarray
    std_errors: np.ndarray
    t_stats: np.ndarray
    t_probs: np.ndarray
    residuals: np.ndarray
    covariance: np.ndarray
    stats: StatBlock
    n_obs: int
    df_resid: int
    has_constant: bool


def gaussian_log_likelihood(ssr: float, n: int) -> float:
    """Gaussian log-likelihood of a least-squares fit, concentrated in ssr.

    l = -(n/2) * (1 + ln 2*pi + ln(ssr/n)).

    Raises PerfectFit when ssr == 0 (the likelihood diverges).
    """
    if n <= 0:
        raise DegenerateSample(f"sample size must be positive, got {n}")
    if ssr < 0:
        raise ValueError(f"ssr must be non-negative, got {ssr}")
    if ssr == 0.0:
        raise PerfectFit("zero residual sum of squares, log-likelihood diverges")
    return -0.5 * n * (1.0 + math.log(2.0 * math.pi) + math.log(ssr / n))


def information_criteria(log_likelihood: float, n: int, k: int) -> tuple[float, float, float]:
    """Per-observation Akaike, Schwarz and Hannan-Quinn criteria.

    aic = (-2l + 2k)/n, sic = (-2l + k ln n)/n, hq = (-2l + 2k ln ln n)/n.
    """
    if k < 1:
        raise DegenerateSample(f"parameter count must be >= 1, got {k}")
    if n <= k:
        raise InsufficientObservations(f"need n > k, got n={n}, k={k}")
    if n <= math.e:
        raise DegenerateSample(f"ln ln n undefined for n={n}")
    aic = (-2.0 * log_likelihood + 2.0 * k) / n
    sic = (-2.0 * log_likelihood + k * math.log(n)) / n
    hq = (-2.0 * log_likelihood + 2.0 * k * math.log(math.log(n))) / n
    return aic, sic, hq


def durbin_watson_stat(residuals: np.ndarray) -> float:
    """Durbin-Watson statistic over residuals in their estimation order."""
    e = np.asarray(residuals, dtype=float).ravel()
    denom = float(e @ e)
    if denom == 0.0:
        return float("nan")
    return float(np.sum(np.diff(e) ** 2) / denom)


def _qr_solve(y: np.ndarray, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Solve min ||y - Xb|| via QR; returns (b, inv(X'X)).

    Raises Collinear naming the first dependent column.
    """
    q, r = np.linalg.qr(x)
    diag = np.abs(np.diag(r))
    scale = diag.max() if diag.size else 0.0
    if scale == 0.0 or np.any(diag < _RANK_TOL * scale):
        bad = int(np.argmin(diag / scale)) if scale > 0.0 else 0
        raise Collinear(
            f"design matrix is rank deficient (column {bad} linearly dependent)",
            column=bad,
        )
    b = np.linalg.solve(r, q.T @ y)
    r_inv = np.linalg.solve(r, np.eye(r.shape[0]))
    xtx_inv = r_inv @ r_inv.T
    return b, xtx_inv


def build_stat_block(y: np.ndarray, residuals: np.ndarray, k: int,
                     has_constant: bool,
                     tss_override: float | None = None) -> StatBlock:
    """Assemble the statistics block from a response and its residuals.

    `tss_override` substitutes the total sum of squares used for R-squared
    (needed by GLS reweighting, where centering happens against the
    transformed constant rather than the plain mean).
    """
    y = np.asarray(y, dtype=float).ravel()
    e = np.asarray(residuals, dtype=float).ravel()
    n = y.size
    ssr = _snap_ssr(float(e @ e), float(y @ y))
    mean_dep = float(np.mean(y))
    sd_dep = float(np.std(y, ddof=1)) if n > 1 else float("nan")
    if tss_override is not None:
        tss = tss_override
    elif has_constant:
        tss = float(np.sum((y - mean_dep) ** 2))
    else:
        tss = float(y @ y)
    tss = _snap_ssr(tss, float(y @ y))
    if tss > 0.0:
        r2 = 1.0 - ssr / tss
    else:
        r2 = 0.0 if ssr == 0.0 else float("nan")  # constant response
    adj_r2 = 1.0 - (1.0 - r2) * (n - 1) / (n - k) if n > k else float("nan")
    se_reg = math.sqrt(ssr / (n - k)) if n > k else float("nan")
    if has_constant and k > 1 and not math.isnan(r2) and r2 < 1.0:
        f_stat = (r2 / (k - 1)) / ((1.0 - r2) / (n - k))
        f_prob = f_upper_tail(f_stat, k - 1, n - k)
    else:
        f_stat = float("nan")
        f_prob = float("nan")
    try:
        ll = gaussian_log_likelihood(ssr, n)
        aic, sic, hq = information_criteria(ll, n, k)
    except PerfectFit:
        ll = float("inf")
        aic = sic = hq = float("-inf")
    return StatBlock(
        r_squared=r2,
        adj_r_squared=adj_r2,
        se_regression=se_reg,
        ssr=ssr,
        log_likelihood=ll,
        f_stat=f_stat,
        f_prob=f_prob,
        durbin_watson=durbin_watson_stat(e),
        mean_dep=mean_dep,
        sd_dep=sd_dep,
        aic=aic,
        sic=sic,
        hq=hq,
    )


def ols_fit(y: np.ndarray, x: np.ndarray, has_constant: bool = True) -> RegressionFit:
    """Pooled ordinary least squares of y on the columns of x.

    Classical covariance s^2 (X'X)^-1 with s^2 = ssr/(n-k). The caller is
    responsible for appending the constant column (last, by convention) and
    setting `has_constant` accordingly.
    """
    y = np.asarray(y, dtype=float).ravel()
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if x.shape[0] != y.size:
        raise ValueError(f"row mismatch: y has {y.size}, X has {x.shape[0]}")
    n, k = x.shape
    if n <= k:
        raise InsufficientObservations(f"need n > k, got n={n}, k={k}")
    b, xtx_inv = _qr_solve(y, x)
    residuals = y - x @ b
    ssr = _snap_ssr(float(residuals @ residuals), float(y @ y))
    s2 = ssr / (n - k)
    covariance = s2 * xtx_inv
    std_errors = np.sqrt(np.diag(covariance))
    with np.errstate(divide="ignore", invalid="ignore"):
        t_stats = np.where(std_errors > 0.0, b / std_errors, np.nan)
    t_probs = np.array([
        t_two_tailed_prob(float(t), n - k) if math.isfinite(t) else float("nan")
        for t in t_stats
    ])
    stats = build_stat_block(y, residuals, k, has_constant)
    return RegressionFit(
        coefficients=b,
        std_errors=std_errors,
        t_stats=t_stats,
        t_probs=t_probs,
        residuals=residuals,
        covariance=covariance,
        stats=stats,
        n_obs=n,
        df_resid=n - k,
        has_constant=has_constant,
    )
