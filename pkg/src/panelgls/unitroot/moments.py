"""Null-moment constants for the panel unit-root statistics.

The tau-moment table (per deterministic spec, series length and lag order)
standardizes the cross-unit mean tau; the adjustment table re-centers the
pooled t-ratio. Both tables are frozen Monte Carlo output produced by
``tools/gen_unitroot_moments.py`` against this package's own regression
conventions, which keeps the standardization self-consistent; the script
header documents replication counts. Lookups interpolate linearly in the
sample-length dimension and clamp at the tabulated ends, except below the
lower end, which raises UnsupportedSampleSize.
"""

from __future__ import annotations

import math

from ..errors import UnsupportedSampleSize
from ._moment_tables import (
    ASY_SEL_TAU_MOMENTS,
    ASY_TAU_MOMENTS,
    ASY_ZT_MOMENTS,
    IPS_TAU_MOMENTS,
    LLC_ADJUSTMENTS,
    PP_ZT_MOMENTS,
    SEL_TAU_MOMENTS,
)


def _interp(table: dict[int, tuple[float, float]], x: float) -> tuple[float, float]:
    keys = sorted(table)
    if x <= keys[0]:
        return table[keys[0]]
    if x >= keys[-1]:
        return table[keys[-1]]
    for lo, hi in zip(keys, keys[1:]):
        if lo <= x <= hi:
            w = (x - lo) / (hi - lo)
            alo, blo = table[lo]
            ahi, bhi = table[hi]
            return alo + w * (ahi - alo), blo + w * (bhi - blo)
    raise AssertionError("unreachable")


def ips_moments(code: str, t: int, p: int) -> tuple[float, float]:
    """Mean and variance of the null tau for series length t with p lags."""
    try:
        by_lag = IPS_TAU_MOMENTS[code]
    except KeyError:
        raise UnsupportedSampleSize(f"no tau moments for spec {code!r}") from None
    global_min = min(min(table) for table in by_lag.values())
    if t < global_min:
        raise UnsupportedSampleSize(
            f"tau moments tabulated for T >= {global_min}, got T={t}"
        )
    # clamp the lag down to the largest tabulated order
    lags = sorted(by_lag)
    if p > lags[-1]:
        p = lags[-1]
    table = by_lag[p]
    return _interp(table, float(t))


def standardize_tau(tau: float, code: str, t: int, p: int) -> float:
    """Map a finite-sample tau onto the asymptotic location/scale.

    The response-surface p-value approximation refers to the limiting
    distribution; small samples spread the statistic out and shift it, which
    makes raw surface lookups anti-conservative. Standardizing by the
    tabulated finite-T moments and re-expressing against the asymptotic
    anchor removes the first two moments of that distortion.
    """
    mean_t, var_t = ips_moments(code, t, p)
    mean_inf, var_inf = ASY_TAU_MOMENTS[code]
    return mean_inf + (tau - mean_t) * math.sqrt(var_inf / var_t)


def selected_tau_moments(code: str, t: int) -> tuple[float, float]:
    """Null mean/variance of tau at the Schwarz-selected lag (default cap).

    Lag selection conditions the tau distribution, so standardizing with
    per-lag moments leaves the post-selection statistic biased; these
    moments absorb the selection step itself.
    """
    try:
        table = SEL_TAU_MOMENTS[code]
    except KeyError:
        raise UnsupportedSampleSize(
            f"no selected-lag tau moments for spec {code!r}") from None
    t_values = sorted(table)
    if t < t_values[0]:
        raise UnsupportedSampleSize(
            f"selected-lag tau moments tabulated for T >= {t_values[0]}, got T={t}"
        )
    return _interp(table, float(t))


def standardize_tau_selected(tau: float, code: str, t: int) -> float:
    """Finite-sample standardization for a tau at its Schwarz-selected lag."""
    mean_t, var_t = selected_tau_moments(code, t)
    mean_inf, var_inf = ASY_SEL_TAU_MOMENTS[code]
    return mean_inf + (tau - mean_t) * math.sqrt(var_inf / var_t)


def standardize_zt(zt: float, code: str, t: int) -> float:
    """Finite-sample location/scale adjustment for the Z-tau statistic."""
    try:
        table = PP_ZT_MOMENTS[code]
    except KeyError:
        raise UnsupportedSampleSize(f"no Z-tau moments for spec {code!r}") from None
    t_values = sorted(table)
    if t < t_values[0]:
        raise UnsupportedSampleSize(
            f"Z-tau moments tabulated for T >= {t_values[0]}, got T={t}"
        )
    mean_t, var_t = _interp(table, float(t))
    mean_inf, var_inf = ASY_ZT_MOMENTS[code]
    return mean_inf + (zt - mean_t) * math.sqrt(var_inf / var_t)


def llc_adjustment(code: str, t_bar: float) -> tuple[float, float]:
    """Mean/std adjustment (mu*, sigma*) for the pooled t-ratio at T~ = t_bar."""
    try:
        table = LLC_ADJUSTMENTS[code]
    except KeyError:
        raise UnsupportedSampleSize(f"no adjustment table for spec {code!r}") from None
    t_values = sorted(table)
    if t_bar < t_values[0] - 1e-9:
        raise UnsupportedSampleSize(
            f"adjustments tabulated for T~ >= {t_values[0]}, got {t_bar:.2f}"
        )
    return _interp(table, float(t_bar))
