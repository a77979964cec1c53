"""Independent brute-force reference implementations used by the tests.

Everything here is deliberately naive - cofactor inversion, explicit
double/triple loops - so it shares no code path with the library. These
oracles pin down expected values; keep them slow and obvious.
"""

from __future__ import annotations

import math

import numpy as np


def det_cofactor(m) -> float:
    """Determinant by cofactor (Laplace) expansion along the first row."""
    m = [list(map(float, row)) for row in m]
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0.0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += ((-1.0) ** j) * m[0][j] * det_cofactor(minor)
    return total


def inv_cofactor(m) -> np.ndarray:
    """Matrix inverse via the adjugate: inv = adj(M)^T / det(M)."""
    m = [list(map(float, row)) for row in m]
    n = len(m)
    d = det_cofactor(m)
    cof = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            cof[i, j] = ((-1.0) ** (i + j)) * det_cofactor(minor)
    return cof.T / d


def ols_normal_equations(y, x) -> np.ndarray:
    """Least squares through explicit (X'X)^-1 X'y with cofactor inversion."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float).ravel()
    xtx = x.T @ x
    return inv_cofactor(xtx) @ (x.T @ y)


def period_covariance_loops(residuals, divisor_n: bool = True) -> np.ndarray:
    """sigma[t, s] = (1/N) sum_i e[i, t] e[i, s] via explicit double loop."""
    e = np.asarray(residuals, dtype=float)
    n_units, n_periods = e.shape
    denom = n_units if divisor_n else n_units - 1
    sigma = np.zeros((n_periods, n_periods))
    for t in range(n_periods):
        for s in range(n_periods):
            acc = 0.0
            for i in range(n_units):
                acc += e[i, t] * e[i, s]
            sigma[t, s] = acc / denom
    return sigma


def pcse_loops(x_blocks, resid_blocks, n: int, k: int,
               df_corrected: bool = True) -> np.ndarray:
    """Sandwich covariance via explicit loops over units, periods, columns."""
    x_blocks = np.asarray(x_blocks, dtype=float)
    resid_blocks = np.asarray(resid_blocks, dtype=float)
    n_units, n_periods, n_cols = x_blocks.shape
    omega = period_covariance_loops(resid_blocks)
    xtx = np.zeros((n_cols, n_cols))
    for i in range(n_units):
        for t in range(n_periods):
            for a in range(n_cols):
                for b in range(n_cols):
                    xtx[a, b] += x_blocks[i, t, a] * x_blocks[i, t, b]
    meat = np.zeros((n_cols, n_cols))
    for i in range(n_units):
        for t in range(n_periods):
            for s in range(n_periods):
                for a in range(n_cols):
                    for b in range(n_cols):
                        meat[a, b] += (x_blocks[i, t, a] * omega[t, s]
                                       * x_blocks[i, s, b])
    bread = inv_cofactor(xtx)
    cov = bread @ meat @ bread
    if df_corrected:
        cov = cov * (n / (n - k))
    return cov


def pearson_loops(a, b) -> float:
    """Plain-sum Pearson correlation of two sequences."""
    a = list(map(float, a))
    b = list(map(float, b))
    n = len(a)
    ma = sum(a) / n
    mb = sum(b) / n
    num = sum((x - ma) * (y - mb) for x, y in zip(a, b))
    da = math.sqrt(sum((x - ma) ** 2 for x in a))
    db = math.sqrt(sum((y - mb) ** 2 for y in b))
    return num / (da * db)


def csd_loops(residuals, demean: bool = True) -> tuple[float, float, float]:
    """(BP LM, scaled LM, CD) via explicit pairwise loops."""
    e = np.asarray(residuals, dtype=float)
    n_units, n_periods = e.shape
    rows = e - e.mean(axis=1, keepdims=True) if demean else e
    lm = 0.0
    scaled_sum = 0.0
    cd_sum = 0.0
    for i in range(n_units):
        for j in range(i + 1, n_units):
            num = sum(rows[i, t] * rows[j, t] for t in range(n_periods))
            di = math.sqrt(sum(rows[i, t] ** 2 for t in range(n_periods)))
            dj = math.sqrt(sum(rows[j, t] ** 2 for t in range(n_periods)))
            rho = num / (di * dj)
            lm += n_periods * rho ** 2
            scaled_sum += n_periods * rho ** 2 - 1.0
            cd_sum += rho
    scaled = scaled_sum / math.sqrt(n_units * (n_units - 1))
    cd = math.sqrt(2.0 * n_periods / (n_units * (n_units - 1))) * cd_sum
    return lm, scaled, cd


def adf_tau_bruteforce(series, lags: int, spec: str) -> float:
    """tau via an explicitly assembled design and normal equations."""
    y = np.asarray(series, dtype=float).ravel()
    t = y.size
    dy = np.diff(y)
    start = lags + 1
    rows = t - start
    lhs = dy[start - 1:]
    cols = [y[start - 1:-1]]
    for lag in range(1, lags + 1):
        cols.append(dy[start - 1 - lag:len(dy) - lag])
    if spec in ("c", "ct"):
        cols.append(np.ones(rows))
    if spec == "ct":
        cols.append(np.arange(start + 1, t + 1, dtype=float))
    x = np.column_stack(cols)
    xtx_inv = np.linalg.inv(x.T @ x)
    beta = xtx_inv @ (x.T @ lhs)
    resid = lhs - x @ beta
    s2 = float(resid @ resid) / (rows - x.shape[1])
    se0 = math.sqrt(s2 * xtx_inv[0, 0])
    return float(beta[0] / se0)
