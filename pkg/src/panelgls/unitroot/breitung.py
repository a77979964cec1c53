"""Breitung panel unit-root statistic (trend-and-constant case).

Unlike the pooled t* test, no deterministic component is regressed out when
the proxies are built: the differenced series is forward-orthogonalized
(Helmert transform), which annihilates a drift, and the lagged level is
adjusted by its start value and endpoint-to-endpoint trend. The slope
t-ratio of the pooled through-origin regression of the two transformed
series is asymptotically standard normal.
"""

from __future__ import annotations

import math

import numpy as np

from ..dists import normal_cdf
from ..errors import InsufficientObservations


def breitung_statistic(panel: np.ndarray) -> tuple[float, float]:
    """Breitung lambda statistic and its lower-tail normal p-value."""
    data = np.asarray(panel, dtype=float)
    if data.ndim != 2:
        raise ValueError("panel must be an N x T matrix")
    n_units, t = data.shape
    if n_units < 2:
        raise InsufficientObservations("panel tests need at least two units")
    if t < 6:
        raise InsufficientObservations(
            f"Breitung needs at least 6 periods, got {t}"
        )

    e_parts: list[np.ndarray] = []
    v_parts: list[np.ndarray] = []
    for i in range(n_units):
        y = data[i]
        dy = np.diff(y)            # index runs over t = 2..T
        m = dy.size
        s2 = float(dy @ dy) / m    # no exogenous removal, only scale
        if s2 <= 0.0:
            raise InsufficientObservations(f"unit {i} has a constant series")
        e_std = dy / math.sqrt(s2)
        y_std = y / math.sqrt(s2)

        # Helmert (forward-orthogonalization) of e: defined for t = 2..T-1
        tail_means = np.cumsum(e_std[::-1])[::-1]
        e_star = np.empty(m - 1)
        for idx in range(m - 1):
            remaining = m - idx - 1
            forward_mean = (tail_means[idx + 1]) / remaining
            weight = math.sqrt(remaining / (remaining + 1.0))
            e_star[idx] = weight * (e_std[idx] - forward_mean)

        # level proxy y_{t-1} adjusted by the start value and the
        # endpoint-to-endpoint trend of the full series; the full-sample
        # last value is what keeps the pooled cross-moment centered
        tt = np.arange(2.0, t + 1.0)
        v_star = (y_std[:-1] - y_std[0]
                  - (tt - 1.0) / t * (y_std[-1] - y_std[0]))
        e_parts.append(e_star)
        v_parts.append(v_star[: m - 1])

    e = np.concatenate(e_parts)
    v = np.concatenate(v_parts)
    svv = float(v @ v)
    if svv <= 0.0:
        raise InsufficientObservations("degenerate pooled regressor")
    beta = float(v @ e) / svv
    resid = e - beta * v
    dof = e.size - 1
    sigma2 = float(resid @ resid) / dof
    lam = beta * math.sqrt(svv) / math.sqrt(sigma2)
    return lam, normal_cdf(lam)
