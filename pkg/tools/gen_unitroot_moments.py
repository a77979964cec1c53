#!/usr/bin/env python3
"""Generate the frozen null-moment tables for the panel unit-root battery.

Simulates driftless random walks (the unit-root null) and tabulates:

* per-(spec, T, lag) mean/variance of the tau statistic exactly as
  ``panelgls.unitroot.adf.adf_regression`` computes it - used both to
  standardize the cross-unit mean tau and to moment-adjust per-unit
  p-values for finite samples;
* per-(spec, T) mean/variance of the Z-tau statistic exactly as
  ``panelgls.unitroot.pp.pp_statistic`` computes it;
* asymptotic anchor moments per spec (1/T extrapolation over the largest
  tabulated lengths), the target of the finite-sample standardization;
* per-(spec, T~) mean/std adjustment constants for the pooled t-ratio,
  estimated at N=1000 units per replication so the large-N limit is
  effectively reached.

All simulations are vectorized mirrors of the library code; the script
cross-checks replications against the scalar implementations before
trusting the batch, then rewrites src/panelgls/unitroot/_moment_tables.py.

Run from the repository root:  python3 tools/gen_unitroot_moments.py
(completes in roughly half an hour on a laptop)
"""

from __future__ import annotations

import math
import sys
import time
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from panelgls.unitroot.adf import (  # noqa: E402
    adf_regression,
    default_max_lag,
    max_lag_with_df,
    select_lag_sic,
)
from panelgls.unitroot.lrv import newey_west_bandwidth  # noqa: E402
from panelgls.unitroot.pp import pp_statistic  # noqa: E402

SEED = 20240517
TAU_T_GRID = [6, 7, 8, 9, 10, 12, 15, 20, 25, 30, 40, 50, 60, 70, 100, 150, 200, 400]
TAU_MAX_LAG = 8
PP_T_GRID = [10, 12, 15, 20, 25, 30, 40, 50, 60, 70, 100, 150, 200, 400]
ASY_FIT_T = [100, 150, 200, 400]
LLC_TBAR_GRID = [4, 5, 6, 8, 10, 15, 20, 25, 30, 40, 50, 70, 100]
LLC_N_UNITS = 1000


def tau_reps(t: int) -> int:
    if t <= 10:
        return 400_000
    if t <= 30:
        return 250_000
    if t <= 100:
        return 120_000
    return 60_000


def llc_reps(t_bar: int) -> int:
    if t_bar <= 10:
        return 4000
    if t_bar <= 30:
        return 3000
    return 2000


def det_count(code: str) -> int:
    return {"n": 0, "c": 1, "ct": 2}[code]


def feasible(t: int, p: int, code: str) -> bool:
    # require >= 3 residual degrees of freedom, otherwise the tau statistic
    # has an infinite variance and the tabulated moments are meaningless
    n = t - 1 - p
    k = 1 + p + det_count(code)
    return n - k >= 3


def batched_tau(y: np.ndarray, p: int, code: str) -> np.ndarray:
    """tau statistics for an R x T batch, mirroring adf_regression."""
    r, t = y.shape
    dy = np.diff(y, axis=1)
    start = p + 1
    n = t - start
    lhs = dy[:, start - 1:]
    cols = [y[:, start - 1:t - 1]]
    for lag in range(1, p + 1):
        cols.append(dy[:, start - 1 - lag:dy.shape[1] - lag])
    if code in ("c", "ct"):
        cols.append(np.broadcast_to(np.ones(n), (r, n)))
    if code == "ct":
        trend = np.arange(start + 1, t + 1, dtype=float)
        cols.append(np.broadcast_to(trend, (r, n)))
    x = np.stack(cols, axis=2)
    k = x.shape[2]
    xtx = np.einsum("rnk,rnl->rkl", x, x)
    xty = np.einsum("rnk,rn->rk", x, lhs)
    beta = np.linalg.solve(xtx, xty[..., None])[..., 0]
    resid = lhs - np.einsum("rnk,rk->rn", x, beta)
    ssr = np.einsum("rn,rn->r", resid, resid)
    s2 = ssr / (n - k)
    xtx_inv = np.linalg.inv(xtx)
    se0 = np.sqrt(s2 * xtx_inv[:, 0, 0])
    return beta[:, 0] / se0


def batched_zt(y: np.ndarray, code: str) -> np.ndarray:
    """Z-tau statistics for an R x T batch, mirroring pp_statistic."""
    r, t = y.shape
    n = t - 1
    lhs = y[:, 1:]
    cols = [y[:, :-1]]
    if code in ("c", "ct"):
        cols.append(np.broadcast_to(np.ones(n), (r, n)))
    if code == "ct":
        cols.append(np.broadcast_to(np.arange(2.0, t + 1.0), (r, n)))
    x = np.stack(cols, axis=2)
    k = x.shape[2]
    xtx = np.einsum("rnk,rnl->rkl", x, x)
    xty = np.einsum("rnk,rn->rk", x, lhs)
    beta = np.linalg.solve(xtx, xty[..., None])[..., 0]
    resid = lhs - np.einsum("rnk,rk->rn", x, beta)
    ssr = np.einsum("rn,rn->r", resid, resid)
    s2 = ssr / (n - k)
    gamma0 = ssr / n
    bw = newey_west_bandwidth(t)
    lam2 = gamma0.copy()
    for j in range(1, min(bw, n - 1) + 1):
        gamma_j = np.einsum("rn,rn->r", resid[:, j:], resid[:, :-j]) / n
        lam2 += 2.0 * (1.0 - j / (bw + 1.0)) * gamma_j
    np.maximum(lam2, 1e-12, out=lam2)
    xtx_inv = np.linalg.inv(xtx)
    se_rho = np.sqrt(s2 * xtx_inv[:, 0, 0])
    t_rho = (beta[:, 0] - 1.0) / se_rho
    return (np.sqrt(gamma0 / lam2) * t_rho
            - 0.5 * (lam2 - gamma0) / np.sqrt(lam2) * n * se_rho / np.sqrt(s2))


def batched_tau_with_stats(y: np.ndarray, p: int, code: str,
                           align_to: int) -> tuple[np.ndarray, np.ndarray]:
    """(tau, per-observation Schwarz criterion) on the common sample."""
    r, t = y.shape
    dy = np.diff(y, axis=1)
    start = align_to + 1
    n = t - start
    lhs = dy[:, start - 1:]
    cols = [y[:, start - 1:t - 1]]
    for lag in range(1, p + 1):
        cols.append(dy[:, start - 1 - lag:dy.shape[1] - lag])
    if code in ("c", "ct"):
        cols.append(np.broadcast_to(np.ones(n), (r, n)))
    if code == "ct":
        trend = np.arange(start + 1, t + 1, dtype=float)
        cols.append(np.broadcast_to(trend, (r, n)))
    x = np.stack(cols, axis=2)
    k = x.shape[2]
    xtx = np.einsum("rnk,rnl->rkl", x, x)
    xty = np.einsum("rnk,rn->rk", x, lhs)
    beta = np.linalg.solve(xtx, xty[..., None])[..., 0]
    resid = lhs - np.einsum("rnk,rk->rn", x, beta)
    ssr = np.einsum("rn,rn->r", resid, resid)
    ll = -0.5 * n * (1.0 + math.log(2.0 * math.pi) + np.log(ssr / n))
    sic = (-2.0 * ll + k * math.log(n)) / n
    s2 = ssr / (n - k)
    xtx_inv = np.linalg.inv(xtx)
    se0 = np.sqrt(s2 * xtx_inv[:, 0, 0])
    return beta[:, 0] / se0, sic


def batched_selected_tau(y: np.ndarray, cap: int, code: str) -> np.ndarray:
    """tau at the Schwarz-selected lag, mirroring select_lag_sic."""
    r, t = y.shape
    feas = [p for p in range(cap + 1) if t - 1 - cap > 1 + p + det_count(code)]
    sics = np.full((len(feas), r), np.inf)
    for idx, p in enumerate(feas):
        _, sics[idx] = batched_tau_with_stats(y, p, code, align_to=cap)
    chosen = np.argmin(sics, axis=0)  # ties resolve to the smaller lag
    taus = np.empty(r)
    for idx, p in enumerate(feas):
        mask = chosen == idx
        if mask.any():
            taus[mask] = batched_tau(y[mask], p, code)
    return taus


def sel_cap(t: int, code: str) -> int:
    return max(0, min(default_max_lag(t), max_lag_with_df(t, code, 3)))


def gen_sel_tau(rng: np.random.Generator) -> dict:
    tables: dict[str, dict[int, tuple[float, float]]] = {"n": {}, "c": {}, "ct": {}}
    block = 30_000
    for code in ("n", "c", "ct"):
        for t in TAU_T_GRID:
            if t - 2 - det_count(code) - 3 < 0:  # no feasible lag at all
                continue
            cap = sel_cap(t, code)
            reps = tau_reps(t)
            acc = np.zeros(2)
            done = 0
            while done < reps:
                m = min(block, reps - done)
                y = np.cumsum(rng.standard_normal((m, t)), axis=1)
                tau = batched_selected_tau(y, cap, code)
                acc += (tau.sum(), (tau ** 2).sum())
                done += m
            mean = acc[0] / reps
            var = (acc[1] - reps * mean ** 2) / (reps - 1)
            tables[code][t] = (round(mean, 6), round(var, 6))
            print(f"  selected-lag tau {code} T={t} cap={cap} done ({reps} reps)",
                  flush=True)
    return tables


def check_mirrors(rng: np.random.Generator) -> None:
    for code in ("n", "c", "ct"):
        for t, p in ((10, 0), (15, 2), (30, 3)):
            y = np.cumsum(rng.standard_normal((5, t)), axis=1)
            batch = batched_tau(y, p, code)
            for i in range(5):
                tau, _ = adf_regression(y[i], p, code)
                assert abs(tau - batch[i]) < 1e-10, (code, t, p)
        for t in (12, 40):
            y = np.cumsum(rng.standard_normal((5, t)), axis=1)
            batch = batched_zt(y, code)
            for i in range(5):
                zt, _ = pp_statistic(y[i], code)
                assert abs(zt - batch[i]) < 1e-10, (code, t)
        for t in (12, 30):
            cap = sel_cap(t, code)
            y = np.cumsum(rng.standard_normal((8, t)), axis=1)
            batch = batched_selected_tau(y, cap, code)
            for i in range(8):
                lag = select_lag_sic(y[i], cap, code)
                tau, _ = adf_regression(y[i], lag, code)
                assert abs(tau - batch[i]) < 1e-10, (code, t, lag)
    print("batched statistics match the scalar implementations")


def gen_tau(rng: np.random.Generator) -> dict:
    tables: dict[str, dict[int, dict[int, tuple[float, float]]]] = {
        "n": {}, "c": {}, "ct": {}}
    block = 30_000
    for code in ("n", "c", "ct"):
        for t in TAU_T_GRID:
            reps = tau_reps(t)
            lags = [p for p in range(TAU_MAX_LAG + 1) if feasible(t, p, code)]
            sums = {p: np.zeros(2) for p in lags}
            done = 0
            while done < reps:
                m = min(block, reps - done)
                y = np.cumsum(rng.standard_normal((m, t)), axis=1)
                for p in lags:
                    tau = batched_tau(y, p, code)
                    sums[p] += (tau.sum(), (tau ** 2).sum())
                done += m
            for p in lags:
                s1, s2 = sums[p]
                mean = s1 / reps
                var = (s2 - reps * mean ** 2) / (reps - 1)
                tables[code].setdefault(p, {})[t] = (round(mean, 6), round(var, 6))
            print(f"  tau moments {code} T={t} done ({reps} reps)", flush=True)
    return tables


def gen_pp(rng: np.random.Generator) -> dict:
    tables: dict[str, dict[int, tuple[float, float]]] = {"n": {}, "c": {}, "ct": {}}
    block = 30_000
    for code in ("n", "c", "ct"):
        for t in PP_T_GRID:
            reps = tau_reps(t)
            acc = np.zeros(2)
            done = 0
            while done < reps:
                m = min(block, reps - done)
                y = np.cumsum(rng.standard_normal((m, t)), axis=1)
                zt = batched_zt(y, code)
                acc += (zt.sum(), (zt ** 2).sum())
                done += m
            mean = acc[0] / reps
            var = (acc[1] - reps * mean ** 2) / (reps - 1)
            tables[code][t] = (round(mean, 6), round(var, 6))
            print(f"  Z-tau moments {code} T={t} done ({reps} reps)", flush=True)
    return tables


def fit_asymptote(table: dict[int, tuple[float, float]]) -> tuple[float, float]:
    """Extrapolate (mean, var) to T -> inf, linear in 1/T over the anchors."""
    ts = [t for t in ASY_FIT_T if t in table]
    x = np.array([1.0 / t for t in ts])
    design = np.column_stack([np.ones_like(x), x])
    means = np.array([table[t][0] for t in ts])
    variances = np.array([table[t][1] for t in ts])
    coef_m, *_ = np.linalg.lstsq(design, means, rcond=None)
    coef_v, *_ = np.linalg.lstsq(design, variances, rcond=None)
    return round(float(coef_m[0]), 6), round(float(coef_v[0]), 6)


def detrend_rows(a: np.ndarray, code: str) -> np.ndarray:
    if code == "n":
        return a
    if code == "c":
        return a - a.mean(axis=1, keepdims=True)
    n = a.shape[1]
    d = np.column_stack([np.ones(n), np.arange(1.0, n + 1.0)])
    proj = d @ np.linalg.solve(d.T @ d, d.T)
    return a - a @ proj.T


def gen_llc(rng: np.random.Generator) -> dict:
    tables: dict[str, dict[int, tuple[float, float]]] = {"n": {}, "c": {}, "ct": {}}
    for code in ("n", "c", "ct"):
        for t_bar in LLC_TBAR_GRID:
            t = t_bar + 1
            k = 1 + det_count(code)
            if t_bar - k < 3:
                continue
            reps = llc_reps(t_bar)
            bandwidth = newey_west_bandwidth(t_bar)
            weights = np.array([1.0 - j / (bandwidth + 1.0)
                                for j in range(1, bandwidth + 1)])
            t_deltas = np.empty(reps)
            corrections = np.empty(reps)
            chunk = max(10, int(5e6 / (LLC_N_UNITS * t)))
            done = 0
            while done < reps:
                m = min(chunk, reps - done)
                y = np.cumsum(
                    rng.standard_normal((m * LLC_N_UNITS, t)), axis=1)
                dy = np.diff(y, axis=1)
                level = y[:, :-1]
                e = detrend_rows(dy, code)
                v = detrend_rows(level, code)
                ev = np.einsum("rn,rn->r", e, v)
                vv = np.einsum("rn,rn->r", v, v)
                delta_i = ev / vv
                resid = e - delta_i[:, None] * v
                ssr = np.einsum("rn,rn->r", resid, resid)
                sigma2_i = ssr / (t_bar - k)
                dy_det = detrend_rows(dy, code)
                lrv = np.einsum("rn,rn->r", dy_det, dy_det) / t_bar
                for j, w in enumerate(weights, start=1):
                    gamma = np.einsum("rn,rn->r", dy_det[:, j:], dy_det[:, :-j]) / t_bar
                    lrv = lrv + 2.0 * w * gamma
                np.maximum(lrv, 1e-12, out=lrv)
                ratio = np.sqrt(lrv) / np.sqrt(sigma2_i)

                sig = np.sqrt(sigma2_i)[:, None]
                e_std = (e / sig).reshape(m, LLC_N_UNITS, t_bar)
                v_std = (v / sig).reshape(m, LLC_N_UNITS, t_bar)
                ev_r = np.einsum("mnt,mnt->m", e_std, v_std)
                vv_r = np.einsum("mnt,mnt->m", v_std, v_std)
                delta = ev_r / vv_r
                resid_pool = e_std - delta[:, None, None] * v_std
                rss = np.einsum("mnt,mnt->m", resid_pool, resid_pool)
                sigma_tilde_sq = rss / (LLC_N_UNITS * t_bar)
                se_delta = np.sqrt(sigma_tilde_sq / vv_r)
                t_delta = delta / se_delta
                s_bar = ratio.reshape(m, LLC_N_UNITS).mean(axis=1)
                corr = LLC_N_UNITS * t_bar * s_bar * se_delta / sigma_tilde_sq
                t_deltas[done:done + m] = t_delta
                corrections[done:done + m] = corr
                done += m
            mu_star = float(np.mean(t_deltas / corrections))
            sigma_star = float(np.std(t_deltas - corrections * mu_star, ddof=1))
            tables[code][t_bar] = (round(mu_star, 6), round(sigma_star, 6))
            print(f"  adjustment {code} T~={t_bar}: mu*={mu_star:.4f} "
                  f"sigma*={sigma_star:.4f} ({reps} reps)", flush=True)
    return tables


def render(tau: dict, pp: dict, asy_tau: dict, asy_zt: dict, llc: dict,
           sel: dict, asy_sel: dict) -> str:
    lines = [
        '"""Frozen Monte Carlo moment tables; regenerate with '
        'tools/gen_unitroot_moments.py."""',
        "",
        "# tau moments under the unit-root null: spec -> lag -> {T: (mean, variance)}",
        "IPS_TAU_MOMENTS: dict[str, dict[int, dict[int, tuple[float, float]]]] = {",
    ]
    for code, by_lag in tau.items():
        lines.append(f"    {code!r}: {{")
        for p in sorted(by_lag):
            entries = ", ".join(
                f"{t}: ({mv[0]}, {mv[1]})" for t, mv in sorted(by_lag[p].items()))
            lines.append(f"        {p}: {{{entries}}},")
        lines.append("    },")
    lines.append("}")
    lines.append("")
    lines.append("# Z-tau moments under the null: spec -> {T: (mean, variance)}")
    lines.append("PP_ZT_MOMENTS: dict[str, dict[int, tuple[float, float]]] = {")
    for code, table in pp.items():
        entries = ", ".join(
            f"{t}: ({mv[0]}, {mv[1]})" for t, mv in sorted(table.items()))
        lines.append(f"    {code!r}: {{{entries}}},")
    lines.append("}")
    lines.append("")
    lines.append("# T -> inf anchors of the two statistics: spec -> (mean, variance)")
    lines.append(f"ASY_TAU_MOMENTS: dict[str, tuple[float, float]] = {asy_tau!r}")
    lines.append(f"ASY_ZT_MOMENTS: dict[str, tuple[float, float]] = {asy_zt!r}")
    lines.append("")
    lines.append("# tau moments at the Schwarz-selected lag (default lag cap):")
    lines.append("# spec -> {T: (mean, variance)}")
    lines.append("SEL_TAU_MOMENTS: dict[str, dict[int, tuple[float, float]]] = {")
    for code, table in sel.items():
        entries = ", ".join(
            f"{t}: ({mv[0]}, {mv[1]})" for t, mv in sorted(table.items()))
        lines.append(f"    {code!r}: {{{entries}}},")
    lines.append("}")
    lines.append(f"ASY_SEL_TAU_MOMENTS: dict[str, tuple[float, float]] = {asy_sel!r}")
    lines.append("")
    lines.append("# pooled t-ratio adjustments: spec -> {T~: (mu*, sigma*)}")
    lines.append("LLC_ADJUSTMENTS: dict[str, dict[int, tuple[float, float]]] = {")
    for code, table in llc.items():
        entries = ", ".join(
            f"{t}: ({mv[0]}, {mv[1]})" for t, mv in sorted(table.items()))
        lines.append(f"    {code!r}: {{{entries}}},")
    lines.append("}")
    lines.append("")
    return "\n".join(lines)


def main() -> None:
    t0 = time.time()
    rng = np.random.default_rng(SEED)
    check_mirrors(rng)
    print("tau moment tables...")
    tau = gen_tau(rng)
    print("Z-tau moment tables...")
    pp = gen_pp(rng)
    asy_tau = {code: fit_asymptote(tau[code][0]) for code in tau}
    asy_zt = {code: fit_asymptote(pp[code]) for code in pp}
    print("asymptotic anchors:", asy_tau, asy_zt)
    print("pooled-t adjustment tables...")
    llc = gen_llc(rng)
    print("selected-lag tau moment tables...")
    sel = gen_sel_tau(rng)
    asy_sel = {code: fit_asymptote(sel[code]) for code in sel}
    print("selected-lag anchors:", asy_sel)
    out = ROOT / "src" / "panelgls" / "unitroot" / "_moment_tables.py"
    out.write_text(render(tau, pp, asy_tau, asy_zt, llc, sel, asy_sel))
    print(f"wrote {out} in {time.time() - t0:.0f}s")


if __name__ == "__main__":
    main()
