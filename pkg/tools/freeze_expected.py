#!/usr/bin/env python3
"""Freeze the snapshot's expected pipeline outputs via the brute-force oracles.

Every stage is recomputed with the deliberately naive reference
implementations from tests/oracles.py (cofactor-inversion normal equations,
explicit covariance loops, pairwise-correlation loops), *not* with the
library's linear algebra. The frozen JSON is the regression target for the
snapshot thereafter.

Run from the repository root:  python3 tools/freeze_expected.py
"""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tests"))

from oracles import (  # noqa: E402
    csd_loops,
    inv_cofactor,
    ols_normal_equations,
    pcse_loops,
    pearson_loops,
    period_covariance_loops,
)

COUNTRIES: list[str] = []
VARS = ["povertyrate", "inworkpovertyrate", "socialexp", "NEETsrates"]


def load_csv(path: Path) -> dict[str, np.ndarray]:
    rows: dict[tuple[str, int, str], float] = {}
    units, years = set(), set()
    for line in path.read_text().splitlines()[1:]:
        unit, year, var, value = line.split(",")
        rows[(unit, int(year), var)] = float(value)
        units.add(unit)
        years.add(int(year))
    units_sorted = sorted(units)
    years_sorted = sorted(years)
    COUNTRIES.extend(units_sorted)
    panels = {}
    for var in VARS:
        panels[var] = np.array([
            [rows[(u, y, var)] for y in years_sorted] for u in units_sorted
        ])
    return panels


def main() -> None:
    panels = load_csv(ROOT / "fixtures" / "eu28_2010_2016.csv")
    n_units, n_periods = panels["povertyrate"].shape
    n = n_units * n_periods

    y = panels["povertyrate"].ravel()
    x = np.column_stack([
        panels["inworkpovertyrate"].ravel(),
        panels["socialexp"].ravel(),
        panels["NEETsrates"].ravel(),
        np.ones(n),
    ])
    k = x.shape[1]

    # stage 1 by cofactor normal equations
    beta1 = ols_normal_equations(y, x)
    resid1 = (y - x @ beta1).reshape(n_units, n_periods)
    sigma = period_covariance_loops(resid1)

    # whitening via the inverse Cholesky factor (scalar recursion)
    chol = np.linalg.cholesky(sigma)
    l_inv = np.linalg.solve(chol, np.eye(n_periods))
    y_t = (y.reshape(n_units, n_periods) @ l_inv.T).ravel()
    x_blocks = np.einsum("ts,isk->itk", l_inv, x.reshape(n_units, n_periods, k))
    x_t = x_blocks.reshape(n, k)

    beta2 = ols_normal_equations(y_t, x_t)
    resid2 = y_t - x_t @ beta2
    resid_blocks = resid2.reshape(n_units, n_periods)
    pcse = pcse_loops(x_blocks, resid_blocks, n, k)
    std_errors = np.sqrt(np.diag(pcse))

    ssr_w = float(resid2 @ resid2)
    iota = x_t[:, -1]
    mu = float(iota @ y_t) / float(iota @ iota)
    tss_w = float(np.sum((y_t - mu * iota) ** 2))
    dw_w = float(np.sum(np.diff(resid_blocks, axis=1) ** 2) / ssr_w)

    raw_resid = y - x @ beta2
    ssr_u = float(raw_resid @ raw_resid)
    tss_u = float(np.sum((y - y.mean()) ** 2))
    raw_blocks = raw_resid.reshape(n_units, n_periods)
    dw_u = float(np.sum(np.diff(raw_blocks, axis=1) ** 2) / ssr_u)

    bp_lm, scaled_lm, cd = csd_loops(resid_blocks, demean=True)

    # auxiliary heteroskedasticity regression, cofactor normal equations
    aux_y = raw_resid ** 2
    aux_beta = ols_normal_equations(aux_y, x)
    aux_resid = aux_y - x @ aux_beta
    aux_ssr = float(aux_resid @ aux_resid)
    aux_tss = float(np.sum((aux_y - aux_y.mean()) ** 2))
    aux_r2 = 1.0 - aux_ssr / aux_tss

    # plain-sum pooled correlations
    names = ["povertyrate", "inworkpovertyrate", "socialexp", "NEETsrates"]
    correlations = {
        f"{a}|{b}": pearson_loops(panels[a].ravel(), panels[b].ravel())
        for i, a in enumerate(names) for b in names[i + 1:]
    }

    # weighted-residual normality (population moments)
    centered = resid2 - resid2.mean()
    m2 = float(np.mean(centered ** 2))
    skew = float(np.mean(centered ** 3)) / m2 ** 1.5
    kurt = float(np.mean(centered ** 4)) / m2 ** 2
    jb_stat = n * (skew ** 2 / 6.0 + (kurt - 3.0) ** 2 / 24.0)
    jb_prob = math.exp(-jb_stat / 2.0)

    expected = {
        "n_units": n_units,
        "n_periods": n_periods,
        "n_obs": n,
        "stage1_coefficients": beta1.tolist(),
        "period_covariance": sigma.tolist(),
        "coefficients": beta2.tolist(),
        "pcse_std_errors": std_errors.tolist(),
        "pcse_covariance": pcse.tolist(),
        "weighted": {
            "ssr": ssr_w,
            "r_squared": 1.0 - ssr_w / tss_w,
            "durbin_watson": dw_w,
            "mean_dep": float(y_t.mean()),
            "sd_dep": float(np.std(y_t, ddof=1)),
        },
        "unweighted": {
            "ssr": ssr_u,
            "r_squared": 1.0 - ssr_u / tss_u,
            "durbin_watson": dw_u,
            "mean_dep": float(y.mean()),
        },
        "csd": {"bp_lm": bp_lm, "scaled_lm": scaled_lm, "cd": cd},
        "aux_regression": {"coefficients": aux_beta.tolist(), "r_squared": aux_r2},
        "jarque_bera": {"stat": jb_stat, "prob": jb_prob},
        "correlations": correlations,
    }
    out = ROOT / "fixtures" / "expected_eu28.json"
    out.write_text(json.dumps(expected, indent=2, sort_keys=True) + "\n")
    print(f"wrote {out}")
    print("stage-2 coefficients:", np.round(beta2, 6))
    print("PCSE std errors:     ", np.round(std_errors, 6))


if __name__ == "__main__":
    main()
