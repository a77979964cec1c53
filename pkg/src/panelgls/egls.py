"""Panel EGLS with one-step period SUR weighting and panel-corrected errors.

Estimation runs in two stages. Stage one is pooled OLS; its residuals yield
the T x T cross-period covariance. Every unit's stacked block of rows is then
whitened by the inverse Cholesky factor of that covariance, and stage two is
pooled OLS on the transformed data - one step, no iteration. Coefficient
uncertainty comes from a period-SUR panel-corrected sandwich, degrees-of-
freedom corrected by n/(n-k).

Two statistics blocks are reported. The weighted block is computed on the
transformed data, with R-squared centered against the *transformed* constant
column (the GLS-weighted mean), which is why its "mean dependent var" looks
much smaller than the raw mean. The unweighted block evaluates the final
coefficients against the raw data.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Literal

import numpy as np

from .dataset import ModelSpec, PanelDataset, design_matrices
from .errors import SingularPeriodCovariance
from .linreg import (
    RegressionFit,
    StatBlock,
    build_stat_block,
    ols_fit,
)
from .dists import t_two_tailed_prob


@dataclass(frozen=True)
class PeriodCovariance:
    """Symmetric positive-definite T x T cross-period residual covariance."""

    sigma: np.ndarray
    source: Literal["estimated", "supplied"]

    def __post_init__(self):
        sigma = np.asarray(self.sigma, dtype=float)
        if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
            raise SingularPeriodCovariance("period covariance must be square")
        if not np.allclose(sigma, sigma.T, atol=1e-10):
            raise SingularPeriodCovariance("period covariance must be symmetric")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "_chol", _cholesky(sigma))

    @property
    def n_periods(self) -> int:
        return self.sigma.shape[0]

    def cholesky(self) -> np.ndarray:
        """Lower Cholesky factor L with sigma = L L'."""
        return self._chol


def _cholesky(sigma: np.ndarray) -> np.ndarray:
    try:
        chol = np.linalg.cholesky(sigma)
    except np.linalg.LinAlgError:
        raise SingularPeriodCovariance(
            "period covariance is not positive definite"
        ) from None
    chol.setflags(write=False)
    return chol


def panel_durbin_watson(residual_blocks: np.ndarray) -> float:
    """Durbin-Watson over a stacked panel, differencing within units only.

    Unit boundaries are not consecutive observations, so their jumps are
    excluded from the numerator (the stacked-vector formula would otherwise
    inflate the statistic by the cross-unit level differences).
    """
    e = np.asarray(residual_blocks, dtype=float)
    denom = float(np.sum(e ** 2))
    if denom == 0.0:
        return float("nan")
    return float(np.sum(np.diff(e, axis=1) ** 2) / denom)


def estimate_period_covariance(residuals: np.ndarray,
                               divisor: Literal["n", "n-1"] = "n") -> PeriodCovariance:
    """Cross-period covariance of first-stage residuals arranged N x T.

    sigma[t, s] = (1/N) sum_i e[i, t] e[i, s] (divisor "n-1" optionally
    applies a small-sample correction). Requires N > T, otherwise the matrix
    is singular by construction.
    """
    e = np.asarray(residuals, dtype=float)
    if e.ndim != 2:
        raise ValueError("residuals must be an N x T matrix")
    n_units, n_periods = e.shape
    if n_units <= n_periods:
        raise SingularPeriodCovariance(
            f"period covariance needs more units than periods, got N={n_units}, T={n_periods}"
        )
    denom = n_units if divisor == "n" else n_units - 1
    sigma = e.T @ e / denom
    return PeriodCovariance(sigma=sigma, source="estimated")


def period_sur_transform(y_blocks: np.ndarray, x_blocks: np.ndarray,
                         cov: PeriodCovariance) -> tuple[np.ndarray, np.ndarray]:
    """Whiten per-unit T-row blocks by the inverse Cholesky factor.

    `y_blocks` is N x T and `x_blocks` is N x T x k; each unit's block is
    premultiplied by L^-1 where sigma = L L'. With an identity covariance
    this is the identity map.
    """
    chol = cov.cholesky()
    if y_blocks.shape[1] != cov.n_periods:
        raise SingularPeriodCovariance(
            f"covariance is {cov.n_periods}x{cov.n_periods} but blocks have "
            f"{y_blocks.shape[1]} periods"
        )
    l_inv = np.linalg.solve(chol, np.eye(cov.n_periods))
    y_tilde = y_blocks @ l_inv.T
    x_tilde = np.einsum("ts,isk->itk", l_inv, x_blocks)
    return y_tilde, x_tilde


def pcse_covariance(x_blocks: np.ndarray, residual_blocks: np.ndarray,
                    n: int, k: int, df_corrected: bool = True) -> np.ndarray:
    """Period SUR panel-corrected coefficient covariance (sandwich form).

    (X'X)^-1 (sum_i X_i' Omega X_i) (X'X)^-1 scaled by n/(n-k), with Omega
    the T x T covariance of the stage-two residuals across units. Inputs are
    the *transformed* design blocks (N x T x k) and residual blocks (N x T).
    """
    n_units = x_blocks.shape[0]
    omega = residual_blocks.T @ residual_blocks / n_units
    xtx = np.einsum("itk,itl->kl", x_blocks, x_blocks)
    meat = np.einsum("itk,ts,isl->kl", x_blocks, omega, x_blocks)
    bread = np.linalg.inv(xtx)
    cov = bread @ meat @ bread
    if df_corrected:
        cov = cov * (n / (n - k))
    return 0.5 * (cov + cov.T)


@dataclass(frozen=True)
class UnweightedStats:
    """Raw-data statistics evaluated at the final EGLS coefficients."""

    r_squared: float
    ssr: float
    durbin_watson: float
    mean_dep: float
    sd_dep: float


@dataclass(frozen=True)
class EglsFit:
    """Completed period-SUR EGLS estimation."""

    base: RegressionFit
    weighted_stats: StatBlock
    unweighted_stats: UnweightedStats
    period_cov: PeriodCovariance
    column_names: tuple[str, ...]
    n_units: int
    n_periods: int
    raw_residuals: np.ndarray

    @property
    def coefficients(self) -> np.ndarray:
        return self.base.coefficients

    @property
    def std_errors(self) -> np.ndarray:
        return self.base.std_errors

    def residual_matrix(self, weighted: bool = False) -> np.ndarray:
        """Residuals reshaped N x T (stage-two transformed or raw-space)."""
        e = self.base.residuals if weighted else self.raw_residuals
        return e.reshape(self.n_units, self.n_periods)


def egls_fit(ds: PanelDataset, spec: ModelSpec,
             cov_override: PeriodCovariance | None = None,
             cov_divisor: Literal["n", "n-1"] = "n",
             pcse_df_corrected: bool = True) -> EglsFit:
    """Two-stage panel EGLS with period SUR weighting.

    Stage-one pooled OLS residuals estimate the period covariance (unless
    `cov_override` is supplied), every unit block is whitened, and stage two
    re-runs pooled OLS on the transformed data. Standard errors are period
    SUR PCSE.
    """
    y, x, names = design_matrices(ds, spec)
    n, k = x.shape
    window = spec.sample or (ds.period_ids[0], ds.period_ids[-1])
    n_periods = sum(1 for p in ds.period_ids if window[0] <= p <= window[1])
    n_units = ds.n_units

    if cov_override is None:
        stage1 = ols_fit(y, x, has_constant=spec.include_constant)
        first_resid = stage1.residuals.reshape(n_units, n_periods)
        cov = estimate_period_covariance(first_resid, divisor=cov_divisor)
    else:
        if cov_override.n_periods != n_periods:
            raise SingularPeriodCovariance(
                f"override covariance is {cov_override.n_periods} periods, "
                f"sample has {n_periods}"
            )
        cov = cov_override

    y_blocks = y.reshape(n_units, n_periods)
    x_blocks = x.reshape(n_units, n_periods, k)
    y_tilde_blocks, x_tilde_blocks = period_sur_transform(y_blocks, x_blocks, cov)
    y_tilde = y_tilde_blocks.ravel()
    x_tilde = x_tilde_blocks.reshape(n, k)

    stage2 = ols_fit(y_tilde, x_tilde, has_constant=spec.include_constant)
    resid_tilde = stage2.residuals
    resid_blocks = resid_tilde.reshape(n_units, n_periods)

    covariance = pcse_covariance(x_tilde_blocks, resid_blocks, n, k,
                                 df_corrected=pcse_df_corrected)
    std_errors = np.sqrt(np.diag(covariance))
    t_stats = stage2.coefficients / std_errors
    t_probs = np.array([t_two_tailed_prob(float(t), n - k) for t in t_stats])

    # Weighted R-squared centers the transformed dependent against the
    # transformed constant column (the GLS analogue of the weighted mean).
    tss_override = None
    if spec.include_constant:
        iota = x_tilde[:, -1]
        mu = float(iota @ y_tilde) / float(iota @ iota)
        tss_override = float(np.sum((y_tilde - mu * iota) ** 2))
    weighted_stats = build_stat_block(y_tilde, resid_tilde, k,
                                      spec.include_constant,
                                      tss_override=tss_override)
    weighted_stats = replace(
        weighted_stats, durbin_watson=panel_durbin_watson(resid_blocks))

    raw_resid = y - x @ stage2.coefficients
    tss_raw = float(np.sum((y - y.mean()) ** 2)) if spec.include_constant else float(y @ y)
    ssr_raw = float(raw_resid @ raw_resid)
    unweighted = UnweightedStats(
        r_squared=1.0 - ssr_raw / tss_raw if tss_raw > 0 else float("nan"),
        ssr=ssr_raw,
        durbin_watson=panel_durbin_watson(raw_resid.reshape(n_units, n_periods)),
        mean_dep=float(y.mean()),
        sd_dep=float(np.std(y, ddof=1)),
    )

    base = RegressionFit(
        coefficients=stage2.coefficients,
        std_errors=std_errors,
        t_stats=t_stats,
        t_probs=t_probs,
        residuals=resid_tilde,
        covariance=covariance,
        stats=weighted_stats,
        n_obs=n,
        df_resid=n - k,
        has_constant=spec.include_constant,
    )
    return EglsFit(
        base=base,
        weighted_stats=weighted_stats,
        unweighted_stats=unweighted,
        period_cov=cov,
        column_names=names,
        n_units=n_units,
        n_periods=n_periods,
        raw_residuals=raw_resid,
    )
