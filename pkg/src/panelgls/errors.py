"""Exception hierarchy for the panel estimation engine.

Three families map onto the CLI exit codes: configuration problems (exit 2),
data problems (exit 3) and numeric/estimation problems (exit 4).
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(EngineError):
    """Invalid run configuration (unknown flag value, unreadable path, ...)."""


class DataError(EngineError):
    """Problem with the input data itself."""


class NumericError(EngineError):
    """Estimation or evaluation could not proceed numerically."""


class UnbalancedPanel(DataError):
    """A (unit, period, variable) cell is missing or not numeric."""

    def __init__(self, message: str, unit: str | None = None,
                 period: int | None = None, variable: str | None = None):
        super().__init__(message)
        self.unit = unit
        self.period = period
        self.variable = variable


class DuplicateObservation(DataError):
    """The same (unit, period, variable) cell appears more than once."""

    def __init__(self, message: str, unit: str | None = None,
                 period: int | None = None, variable: str | None = None):
        super().__init__(message)
        self.unit = unit
        self.period = period
        self.variable = variable


class UnknownVariable(DataError):
    """A requested variable name is not in the dataset."""


class EmptyWindow(DataError):
    """A requested period window contains no periods."""


class DegenerateVariable(DataError):
    """A variable is constant where variation is required."""


class Collinear(NumericError):
    """Design matrix is rank deficient."""

    def __init__(self, message: str, column: int | None = None):
        super().__init__(message)
        self.column = column


class InsufficientObservations(NumericError):
    """Not enough observations for the requested fit."""


class PerfectFit(NumericError):
    """Residual sum of squares is zero; the Gaussian log-likelihood diverges."""


class DegenerateSample(NumericError):
    """Sample too small for the requested statistic (e.g. ln ln n undefined)."""


class DomainError(NumericError):
    """Argument outside the mathematical domain of a distribution function."""


class SingularPeriodCovariance(NumericError):
    """Estimated cross-period covariance is singular (e.g. N <= T)."""


class DegenerateResiduals(NumericError):
    """Residuals carry no usable variation (all zero / zero variance)."""

    def __init__(self, message: str, unit: str | None = None):
        super().__init__(message)
        self.unit = unit


class UnsupportedSampleSize(NumericError):
    """Sample length outside the range covered by embedded moment tables."""
