"""Fisher combination of per-unit unit-root p-values."""

from __future__ import annotations

import math
from typing import Sequence

from ..dists import chi_sq_upper_tail
from ..errors import DomainError


def fisher_combine(p_values: Sequence[float]) -> tuple[float, int, float]:
    """Combine independent p-values: -2 sum(ln p) ~ chi-square(2N).

    Returns (statistic, dof, p_value). Inputs must lie in (0, 1]; a zero
    makes the statistic infinite and is rejected.
    """
    if len(p_values) == 0:
        raise DomainError("cannot combine an empty collection of p-values")
    total = 0.0
    for p in p_values:
        if not 0.0 < p <= 1.0:
            raise DomainError(f"p-values must lie in (0, 1], got {p}")
        total += math.log(p)
    stat = -2.0 * total
    dof = 2 * len(p_values)
    return stat, dof, chi_sq_upper_tail(stat, dof)
