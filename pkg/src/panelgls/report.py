"""Report assembly and rendering.

The pipeline produces one JSON-able dictionary per run; the text renderer is
a pure function of that dictionary, so re-rendering text from emitted JSON
reproduces the text report byte for byte. Text formatting uses six decimals
for coefficients/statistics and four for probabilities.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from .dataset import ModelSpec, PanelDataset
from .diagnostics import DiagnosticsReport
from .egls import EglsFit
from .errors import ConfigError, UnknownVariable
from .linreg import ols_fit
from .unitroot import UnitRootReport

_RULE = "=" * 78
_THIN = "-" * 78


def json_safe(value: float) -> float | None:
    """Replace non-finite floats with None so payloads stay JSON compliant."""
    value = float(value)
    return value if math.isfinite(value) else None


def fmt6(value: float | None) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "NA"
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.6f}"


def fmt4(value: float | None) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "NA"
    return f"{value:.4f}"


def _stat_block_dict(stats) -> dict[str, float | None]:
    return {
        "r_squared": json_safe(stats.r_squared),
        "adj_r_squared": json_safe(stats.adj_r_squared),
        "se_regression": json_safe(stats.se_regression),
        "ssr": json_safe(stats.ssr),
        "log_likelihood": json_safe(stats.log_likelihood),
        "f_stat": json_safe(stats.f_stat),
        "f_prob": json_safe(stats.f_prob),
        "durbin_watson": json_safe(stats.durbin_watson),
        "mean_dep": json_safe(stats.mean_dep),
        "sd_dep": json_safe(stats.sd_dep),
        "aic": json_safe(stats.aic),
        "sic": json_safe(stats.sic),
        "hq": json_safe(stats.hq),
    }


def estimation_dict(fit: EglsFit, spec: ModelSpec) -> dict[str, Any]:
    return {
        "method": "Panel EGLS (Period SUR)",
        "dependent": spec.dependent,
        "sample": list(spec.sample) if spec.sample else None,
        "n_periods": fit.n_periods,
        "n_units": fit.n_units,
        "n_obs": fit.base.n_obs,
        "weighting": "Linear estimation after one-step weighting matrix",
        "se_note": "Period SUR (PCSE) standard errors & covariance (d.f. corrected)",
        "columns": list(fit.column_names),
        "coefficients": [json_safe(c) for c in fit.coefficients],
        "std_errors": [json_safe(s) for s in fit.std_errors],
        "t_stats": [json_safe(t) for t in fit.base.t_stats],
        "probs": [json_safe(p) for p in fit.base.t_probs],
        "weighted": _stat_block_dict(fit.weighted_stats),
        "unweighted": {
            "r_squared": fit.unweighted_stats.r_squared,
            "ssr": fit.unweighted_stats.ssr,
            "durbin_watson": fit.unweighted_stats.durbin_watson,
            "mean_dep": fit.unweighted_stats.mean_dep,
            "sd_dep": fit.unweighted_stats.sd_dep,
        },
    }


def unitroot_dict(report: UnitRootReport) -> dict[str, Any]:
    return {
        "results": [
            {
                "test": r.test_name,
                "spec": r.spec,
                "statistic": json_safe(r.statistic),
                "p_value": json_safe(r.p_value),
                "rejects": r.rejects_unit_root_at_5pct,
                "error": r.error,
            }
            for r in report.results
        ],
        "votes_stationary": report.votes_stationary,
        "vote_threshold": report.vote_threshold,
        "decision": report.decision,
    }


def diagnostics_dict(report: DiagnosticsReport) -> dict[str, Any]:
    aux = report.bpg_aux
    return {
        "jarque_bera": {"stat": report.jarque_bera[0], "prob": report.jarque_bera[1]},
        "dw": {
            "stat": report.dw_stat,
            "dl": report.dw_bounds.dl,
            "du": report.dw_bounds.du,
            "n": report.dw_bounds.n,
            "k_prime": report.dw_bounds.k_prime,
            "decision": report.dw_decision,
        },
        "bpg": {
            "lm_stat": report.bpg_lm,
            "dof": report.bpg_dof,
            "prob": report.bpg_prob,
            "verdict": "homoskedastic" if report.bpg_prob > 0.05 else "heteroskedastic",
            "aux": {
                "coefficients": [json_safe(c) for c in aux.coefficients],
                "std_errors": [json_safe(s) for s in aux.std_errors],
                "t_stats": [json_safe(t) for t in aux.t_stats],
                "probs": [json_safe(p) for p in aux.t_probs],
                "stats": _stat_block_dict(aux.stats),
            },
        },
        "csd": {
            "bp_lm": report.csd.bp_lm,
            "bp_dof": report.csd.bp_dof,
            "bp_prob": report.csd.bp_prob,
            "scaled_lm": report.csd.scaled_lm,
            "scaled_lm_prob": report.csd.scaled_lm_prob,
            "cd": report.csd.cd,
            "cd_prob": report.csd.cd_prob,
            "demeaned": report.csd.demeaned,
        },
        "correlations": {
            "names": list(report.correlation_names),
            "matrix": [[float(v) for v in row] for row in report.correlations],
        },
        "klein": {
            "verdict": report.klein,
            "max_pair": list(report.klein_max_pair),
            "max_corr": report.klein_max_corr,
        },
    }


def figure_data(ds: PanelDataset, x: str, y: str) -> dict[str, Any]:
    """Scatter rows for two variables plus pooled summary statistics."""
    xs = ds.stacked(x)
    ys = ds.stacked(y)
    rows = []
    for i, unit in enumerate(ds.cross_section_ids):
        for j, period in enumerate(ds.period_ids):
            rows.append({
                "unit": unit,
                "period": period,
                "x": float(ds.matrix(x)[i, j]),
                "y": float(ds.matrix(y)[i, j]),
            })
    cx = xs - xs.mean()
    cy = ys - ys.mean()
    denom = math.sqrt(float(cx @ cx) * float(cy @ cy))
    if denom == 0.0:
        pearson = 1.0 if x == y else float("nan")
    else:
        pearson = float(cx @ cy) / denom
    design = np.column_stack([xs, np.ones_like(xs)])
    fit = ols_fit(ys, design)
    return {
        "x": x,
        "y": y,
        "rows": rows,
        "pearson": pearson,
        "r_squared": fit.stats.r_squared,
    }


_AGGREGATE_IDS = ("EU", "EU27", "EU28", "EA", "EA19")


def delta_report(ds: PanelDataset, var: str, period_from: int,
                 period_to: int) -> dict[str, Any]:
    """Per-unit change of one variable between two periods, sorted descending."""
    matrix = ds.matrix(var)
    j_from = ds.period_index(period_from)
    j_to = ds.period_index(period_to)
    deltas = matrix[:, j_to] - matrix[:, j_from]
    order = np.argsort(-deltas, kind="stable")
    rows = [
        {"unit": ds.cross_section_ids[i], "delta": float(deltas[i])}
        for i in order
    ]
    aggregate = None
    for agg in _AGGREGATE_IDS:
        if agg in ds.cross_section_ids:
            i = ds.cross_section_ids.index(agg)
            aggregate = {"unit": agg, "delta": float(deltas[i])}
            break
    return {
        "variable": var,
        "from": period_from,
        "to": period_to,
        "deltas": rows,
        "aggregate": aggregate,
    }


def render_text(report: dict[str, Any]) -> str:
    """Render a full pipeline report dictionary as fixed-layout text."""
    out: list[str] = []
    dataset = report.get("dataset")
    if dataset:
        out.append(_RULE)
        out.append("PANEL DATASET")
        out.append(_THIN)
        out.append(f"Cross-sections included: {dataset['n_units']}")
        out.append(f"Periods included: {dataset['n_periods']}")
        out.append(f"Sample: {dataset['periods'][0]} {dataset['periods'][-1]}")
        out.append(f"Variables: {', '.join(dataset['variables'])}")
        total = dataset["n_units"] * dataset["n_periods"]
        out.append(f"Total panel (balanced) observations: {total}")
    blocks = report.get("unit_root") or {}
    model = report.get("model") or {}
    preferred = [model.get("dependent"), *(model.get("regressors") or [])]
    ordered = [v for v in preferred if v in blocks]
    ordered += [v for v in sorted(blocks) if v not in ordered]
    for var in ordered:
        block = blocks[var]
        out.append(_RULE)
        out.append(f"UNIT ROOT BATTERY: {var.upper()}")
        out.append(_THIN)
        out.append(f"{'Test':<16}{'Spec':<20}{'Statistic':>12}{'Prob.':>9}  Rejects")
        for row in block["results"]:
            stat = fmt6(row["statistic"]) if row["error"] is None else "--"
            prob = fmt4(row["p_value"]) if row["error"] is None else "--"
            flag = "yes" if row["rejects"] else "no"
            note = f"  [{row['error']}]" if row["error"] else ""
            out.append(f"{row['test']:<16}{row['spec']:<20}{stat:>12}{prob:>9}  {flag}{note}")
        out.append(f"Votes for stationarity: {block['votes_stationary']} of 12 "
                   f"(threshold {block['vote_threshold']})")
        out.append(f"Decision: {block['decision']}")
    est = report.get("estimation")
    if est:
        out.append(_RULE)
        out.append("ESTIMATION")
        out.append(_THIN)
        out.append(f"Dependent Variable: {est['dependent'].upper()}")
        out.append(f"Method: {est['method']}")
        if est.get("sample"):
            out.append(f"Sample: {est['sample'][0]} {est['sample'][1]}")
        out.append(f"Periods included: {est['n_periods']}")
        out.append(f"Cross-sections included: {est['n_units']}")
        out.append(f"Total panel (balanced) observations: {est['n_obs']}")
        out.append(est["weighting"])
        out.append(est["se_note"])
        out.append(_THIN)
        out.append(f"{'Variable':<20}{'Coefficient':>14}{'Std. Error':>14}"
                   f"{'t-Statistic':>14}{'Prob.':>10}")
        for name, coef, se, t, p in zip(est["columns"], est["coefficients"],
                                        est["std_errors"], est["t_stats"],
                                        est["probs"]):
            out.append(f"{name.upper():<20}{fmt6(coef):>14}{fmt6(se):>14}"
                       f"{fmt6(t):>14}{fmt4(p):>10}")
        out.append(_THIN)
        out.append("Weighted Statistics")
        w = est["weighted"]
        out.append(f"{'R-squared':<24}{fmt6(w['r_squared']):>12}   "
                   f"{'Mean dependent var':<24}{fmt6(w['mean_dep']):>12}")
        out.append(f"{'Adjusted R-squared':<24}{fmt6(w['adj_r_squared']):>12}   "
                   f"{'S.D. dependent var':<24}{fmt6(w['sd_dep']):>12}")
        out.append(f"{'S.E. of regression':<24}{fmt6(w['se_regression']):>12}   "
                   f"{'Sum squared resid':<24}{fmt6(w['ssr']):>12}")
        out.append(f"{'F-statistic':<24}{fmt6(w['f_stat']):>12}   "
                   f"{'Durbin-Watson stat':<24}{fmt6(w['durbin_watson']):>12}")
        out.append(f"{'Prob(F-statistic)':<24}{fmt6(w['f_prob']):>12}")
        out.append(_THIN)
        out.append("Unweighted Statistics")
        u = est["unweighted"]
        out.append(f"{'R-squared':<24}{fmt6(u['r_squared']):>12}   "
                   f"{'Mean dependent var':<24}{fmt6(u['mean_dep']):>12}")
        out.append(f"{'Sum squared resid':<24}{fmt6(u['ssr']):>12}   "
                   f"{'Durbin-Watson stat':<24}{fmt6(u['durbin_watson']):>12}")
    diag = report.get("diagnostics")
    if diag:
        out.append(_RULE)
        out.append("RESIDUAL DIAGNOSTICS")
        out.append(_THIN)
        jb = diag["jarque_bera"]
        out.append(f"Jarque-Bera: {fmt6(jb['stat'])}  Probability: {fmt4(jb['prob'])}")
        dw = diag["dw"]
        out.append(f"Durbin-Watson: {fmt6(dw['stat'])}  "
                   f"bounds dL={fmt6(dw['dl'])} dU={fmt6(dw['du'])} "
                   f"(n={dw['n']}, k'={dw['k_prime']})  decision: {dw['decision']}")
        bpg = diag["bpg"]
        out.append(_THIN)
        out.append("Breusch-Pagan-Godfrey (squared residuals on the regressors)")
        aux = bpg["aux"]
        out.append(f"{'Variable':<20}{'Coefficient':>14}{'Std. Error':>14}"
                   f"{'t-Statistic':>14}{'Prob.':>10}")
        names = report["estimation"]["columns"] if report.get("estimation") else [
            f"x{i}" for i in range(len(aux["coefficients"]))]
        for name, coef, se, t, p in zip(names, aux["coefficients"],
                                        aux["std_errors"], aux["t_stats"],
                                        aux["probs"]):
            out.append(f"{name.upper():<20}{fmt6(coef):>14}{fmt6(se):>14}"
                       f"{fmt6(t):>14}{fmt4(p):>10}")
        out.append(f"R-squared {fmt6(aux['stats']['r_squared'])}   "
                   f"F-statistic {fmt6(aux['stats']['f_stat'])}   "
                   f"Prob(F) {fmt4(aux['stats']['f_prob'])}")
        out.append(f"Obs*R-squared {fmt6(bpg['lm_stat'])}   d.f. {bpg['dof']}   "
                   f"Probability {fmt4(bpg['prob'])}   -> {bpg['verdict']}")
        csd = diag["csd"]
        out.append(_THIN)
        out.append("Residual Cross-Section Dependence Test")
        if csd["demeaned"]:
            out.append("Cross-section means were removed during computation of correlations")
        out.append(f"{'Test':<22}{'Statistic':>14}{'d.f.':>7}{'Prob.':>9}")
        out.append(f"{'Breusch-Pagan LM':<22}{fmt6(csd['bp_lm']):>14}"
                   f"{csd['bp_dof']:>7}{fmt4(csd['bp_prob']):>9}")
        out.append(f"{'Pesaran scaled LM':<22}{fmt6(csd['scaled_lm']):>14}"
                   f"{'':>7}{fmt4(csd['scaled_lm_prob']):>9}")
        out.append(f"{'Pesaran CD':<22}{fmt6(csd['cd']):>14}"
                   f"{'':>7}{fmt4(csd['cd_prob']):>9}")
        corr = diag["correlations"]
        out.append(_THIN)
        out.append("Regressor correlation matrix")
        header = f"{'':<20}" + "".join(f"{n.upper():>18}" for n in corr["names"])
        out.append(header)
        for name, row in zip(corr["names"], corr["matrix"]):
            out.append(f"{name.upper():<20}" + "".join(f"{fmt6(v):>18}" for v in row))
        klein = diag["klein"]
        out.append(f"Klein criterion: {klein['verdict']} "
                   f"(max |corr| {fmt6(abs(klein['max_corr']))} between "
                   f"{klein['max_pair'][0]} and {klein['max_pair'][1]})")
    fig = report.get("figure")
    if fig:
        out.append(_RULE)
        out.append(f"FIGURE DATA: {fig['y']} vs {fig['x']}")
        out.append(_THIN)
        out.append("unit,period,x,y")
        for row in fig["rows"]:
            out.append(f"{row['unit']},{row['period']},{fmt6(row['x'])},{fmt6(row['y'])}")
        out.append(f"summary,pearson,{fmt6(fig['pearson'])},r_squared,{fmt6(fig['r_squared'])}")
    delta = report.get("delta")
    if delta:
        out.append(_RULE)
        out.append(f"DELTA REPORT: {delta['variable']} "
                   f"{delta['from']} -> {delta['to']} (percentage points)")
        out.append(_THIN)
        for row in delta["deltas"]:
            out.append(f"{row['unit']:<8}{row['delta']:>10.6f}")
        if delta.get("aggregate"):
            agg = delta["aggregate"]
            out.append(f"aggregate {agg['unit']}: {agg['delta']:+.6f}")
    out.append(_RULE)
    return "\n".join(out) + "\n"


def render_csv(report: dict[str, Any]) -> str:
    """CSV rendering for the row-oriented sections (figure/delta)."""
    if report.get("figure"):
        fig = report["figure"]
        lines = ["unit,period,x,y"]
        for row in fig["rows"]:
            lines.append(f"{row['unit']},{row['period']},{row['x']!r},{row['y']!r}")
        lines.append(f"summary,,{fig['pearson']!r},{fig['r_squared']!r}")
        return "\n".join(lines) + "\n"
    if report.get("delta"):
        delta = report["delta"]
        lines = ["unit,delta"]
        for row in delta["deltas"]:
            lines.append(f"{row['unit']},{row['delta']!r}")
        return "\n".join(lines) + "\n"
    raise ConfigError("csv output is only defined for figure/delta reports")
