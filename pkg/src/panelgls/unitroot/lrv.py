"""Bartlett-kernel long-run variance with the Newey-West automatic bandwidth."""

from __future__ import annotations

import math

import numpy as np


def newey_west_bandwidth(t: int) -> int:
    """floor(4 (T/100)^(2/9)), the fixed Newey-West lag-truncation rule."""
    return int(math.floor(4.0 * (t / 100.0) ** (2.0 / 9.0)))


def bartlett_long_run_variance(u: np.ndarray, bandwidth: int | None = None) -> float:
    """Long-run variance of a series via Bartlett weights.

    lrv = g0 + 2 sum_{j=1..L} (1 - j/(L+1)) g_j with g_j = (1/T) sum u_t u_{t-j}.
    """
    u = np.asarray(u, dtype=float).ravel()
    t = u.size
    if t == 0:
        raise ValueError("empty series")
    if bandwidth is None:
        bandwidth = newey_west_bandwidth(t)
    bandwidth = min(bandwidth, t - 1)
    lrv = float(u @ u) / t
    for j in range(1, bandwidth + 1):
        gamma = float(u[j:] @ u[:-j]) / t
        lrv += 2.0 * (1.0 - j / (bandwidth + 1.0)) * gamma
    return lrv
