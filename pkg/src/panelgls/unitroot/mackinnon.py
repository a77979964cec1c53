"""Response-surface p-values for Dickey-Fuller-type tau statistics.

Coefficients are the standard MacKinnon (1994, updated 2010) regression
surface for a single I(1) series, one table per deterministic
specification. The approximation maps the tau statistic through a cubic
(or quadratic, in the small-p region) polynomial and the normal CDF; beyond
the tabulated range the p-value saturates at 0 or 1.
"""

from __future__ import annotations

from ..dists import normal_cdf

# spec key: (tau_star, tau_min, tau_max, small-p coefs, large-p coefs)
# polynomial coefficients are ascending order: c0 + c1*t + c2*t^2 (+ c3*t^3)
_SURFACE: dict[str, tuple[float, float, float, tuple[float, ...], tuple[float, ...]]] = {
    "n": (
        -1.04, -19.04, float("inf"),
        (0.6344, 1.2378, 0.032496),
        (0.4797, 0.93557, -0.06999, 0.0033066),
    ),
    "c": (
        -1.61, -18.83, 2.74,
        (2.1659, 1.4412, 0.038269),
        (1.7339, 0.93202, -0.12745, -0.010368),
    ),
    "ct": (
        -2.89, -16.18, 0.70,
        (3.2512, 1.6047, 0.049588),
        (2.5261, 0.61654, -0.37956, -0.060285),
    ),
}


def _polyval_ascending(coefs: tuple[float, ...], x: float) -> float:
    total = 0.0
    for c in reversed(coefs):
        total = total * x + c
    return total


def mackinnon_p(tau: float, spec: str) -> float:
    """Approximate p-value of a tau statistic for spec in {'n','c','ct'}."""
    try:
        tau_star, tau_min, tau_max, small, large = _SURFACE[spec]
    except KeyError:
        raise ValueError(f"unknown deterministic spec {spec!r}") from None
    if tau > tau_max:
        return 1.0
    if tau < tau_min:
        return 0.0
    coefs = small if tau <= tau_star else large
    return normal_cdf(_polyval_ascending(coefs, tau))
