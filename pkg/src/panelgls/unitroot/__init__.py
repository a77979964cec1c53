"""Panel unit-root battery: pooled t*, Breitung, W-t-bar and Fisher tests."""

from .adf import (
    ALL_SPECS,
    DeterministicSpec,
    adf_regression,
    default_max_lag,
    select_lag_sic,
    spec_short,
)
from .battery import UnitRootReport, UnitRootResult, battery
from .breitung import breitung_statistic
from .fisher import fisher_combine
from .ips import ips_statistic
from .llc import llc_statistic
from .mackinnon import mackinnon_p
from .pp import pp_single, pp_statistic

__all__ = [
    "ALL_SPECS",
    "DeterministicSpec",
    "UnitRootReport",
    "UnitRootResult",
    "adf_regression",
    "battery",
    "breitung_statistic",
    "default_max_lag",
    "fisher_combine",
    "ips_statistic",
    "llc_statistic",
    "mackinnon_p",
    "pp_single",
    "pp_statistic",
    "select_lag_sic",
    "spec_short",
]
