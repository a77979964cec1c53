"""Balanced-panel econometrics engine.

Core pieces: CSV panel ingestion, pooled OLS with the usual statistics
block, two-stage period-SUR EGLS with panel-corrected standard errors, a
twelve-test panel stationarity battery with majority vote, and a residual
diagnostics suite. A FastAPI service (``panelgls.service``) exposes every
stage; the command-line client (``panelgls.cli``) drives the service.
"""

from .dataset import CsvSchema, ModelSpec, PanelDataset, load_panel_csv, subset
from .dists import (
    chi_sq_upper_tail,
    f_upper_tail,
    normal_cdf,
    t_two_tailed_prob,
)
from .egls import (
    EglsFit,
    PeriodCovariance,
    UnweightedStats,
    egls_fit,
    estimate_period_covariance,
    pcse_covariance,
    period_sur_transform,
)
from .linreg import (
    RegressionFit,
    StatBlock,
    gaussian_log_likelihood,
    information_criteria,
    ols_fit,
)
from .diagnostics import (
    CsdResult,
    DiagnosticsReport,
    DwBounds,
    bpg_test,
    csd_tests,
    durbin_watson,
    dw_bounds,
    dw_decide,
    jarque_bera,
    klein_check,
    pearson_matrix,
)
from .unitroot import (
    UnitRootReport,
    UnitRootResult,
    adf_regression,
    battery,
    fisher_combine,
    select_lag_sic,
)

__version__ = "0.1.0"

__all__ = [
    "CsvSchema",
    "CsdResult",
    "DiagnosticsReport",
    "DwBounds",
    "EglsFit",
    "ModelSpec",
    "PanelDataset",
    "PeriodCovariance",
    "RegressionFit",
    "StatBlock",
    "UnitRootReport",
    "UnitRootResult",
    "UnweightedStats",
    "adf_regression",
    "battery",
    "bpg_test",
    "chi_sq_upper_tail",
    "csd_tests",
    "durbin_watson",
    "dw_bounds",
    "dw_decide",
    "egls_fit",
    "estimate_period_covariance",
    "f_upper_tail",
    "fisher_combine",
    "gaussian_log_likelihood",
    "information_criteria",
    "jarque_bera",
    "klein_check",
    "load_panel_csv",
    "normal_cdf",
    "ols_fit",
    "pcse_covariance",
    "pearson_matrix",
    "period_sur_transform",
    "select_lag_sic",
    "subset",
    "t_two_tailed_prob",
]
