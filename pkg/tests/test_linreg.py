import math

import numpy as np
import pytest

from panelgls.errors import (
    Collinear,
    DegenerateSample,
    InsufficientObservations,
    PerfectFit,
)
from panelgls.linreg import (
    gaussian_log_likelihood,
    information_criteria,
    ols_fit,
)

from oracles import ols_normal_equations


def test_exact_line_through_three_points():
    x = np.column_stack([np.array([0.0, 1.0, 2.0]), np.ones(3)])
    fit = ols_fit(np.array([2.0, 5.0, 8.0]), x)
    assert fit.coefficients == pytest.approx([3.0, 2.0], abs=1e-12)
    assert fit.stats.ssr == pytest.approx(0.0, abs=1e-20)
    assert fit.stats.r_squared == pytest.approx(1.0, abs=1e-12)
    assert math.isinf(fit.stats.log_likelihood)


def test_matches_normal_equations_oracle(rng):
    for trial in range(8):
        n = int(rng.integers(6, 11))
        k = int(rng.integers(2, 5))
        x = np.column_stack([rng.normal(size=(n, k - 1)), np.ones(n)])
        y = rng.normal(size=n)
        fit = ols_fit(y, x)
        expected = ols_normal_equations(y, x)
        assert fit.coefficients == pytest.approx(expected, abs=1e-10)


def test_duplicated_column_raises_collinear(rng):
    base = rng.normal(size=(12, 2))
    x = np.column_stack([base, base[:, 0], np.ones(12)])
    with pytest.raises(Collinear):
        ols_fit(rng.normal(size=12), x)


def test_insufficient_observations():
    with pytest.raises(InsufficientObservations):
        ols_fit(np.zeros(3), np.eye(3))


def test_tstat_identity_and_fprob_consistency(rng):
    from panelgls.dists import f_upper_tail, t_two_tailed_prob

    n, k = 40, 4
    x = np.column_stack([rng.normal(size=(n, k - 1)), np.ones(n)])
    y = x @ np.array([1.0, -0.5, 2.0, 3.0]) + rng.normal(size=n)
    fit = ols_fit(y, x)
    assert fit.t_stats == pytest.approx(fit.coefficients / fit.std_errors, rel=1e-14)
    assert fit.stats.f_prob == pytest.approx(
        f_upper_tail(fit.stats.f_stat, k - 1, n - k), abs=1e-12)
    for t, p in zip(fit.t_stats, fit.t_probs):
        assert p == pytest.approx(t_two_tailed_prob(float(t), n - k), abs=1e-12)


def test_covariance_symmetric_psd(rng):
    n = 25
    x = np.column_stack([rng.normal(size=(n, 2)), np.ones(n)])
    fit = ols_fit(rng.normal(size=n), x)
    cov = fit.covariance
    assert np.allclose(cov, cov.T, atol=1e-14)
    assert np.all(np.linalg.eigvalsh(cov) > -1e-14)


def test_sic_exceeds_aic_when_log_n_above_two(rng):
    n = 30  # ln 30 > 2
    x = np.column_stack([rng.normal(size=n), np.ones(n)])
    fit = ols_fit(rng.normal(size=n), x)
    assert fit.stats.sic > fit.stats.aic


class TestGaussianLogLikelihood:
    def test_reported_value(self):
        assert gaussian_log_likelihood(372.5610, 196) == pytest.approx(-341.0560, abs=1e-3)

    def test_unit_variance_case(self):
        n = 17
        expected = -0.5 * n * (1.0 + math.log(2.0 * math.pi))
        assert gaussian_log_likelihood(float(n), n) == pytest.approx(expected, abs=1e-12)

    def test_direct_formula(self):
        # ssr=10, n=5 evaluated independently
        expected = -0.5 * 5 * (1.0 + math.log(2.0 * math.pi) + math.log(10.0 / 5.0))
        assert gaussian_log_likelihood(10.0, 5) == pytest.approx(expected, abs=1e-12)

    def test_perfect_fit_flagged(self):
        with pytest.raises(PerfectFit):
            gaussian_log_likelihood(0.0, 10)


class TestInformationCriteria:
    def test_reported_triple(self):
        aic, sic, hq = information_criteria(-341.0560, 196, 4)
        assert aic == pytest.approx(3.520979, abs=1e-5)
        assert sic == pytest.approx(3.587880, abs=1e-5)
        assert hq == pytest.approx(3.548064, abs=1e-5)

    def test_zero_parameters_rejected(self):
        with pytest.raises(DegenerateSample):
            information_criteria(-10.0, 20, 0)

    def test_hand_evaluation(self):
        aic, sic, hq = information_criteria(-10.0, 20, 2)
        assert aic == pytest.approx((20.0 + 4.0) / 20.0, abs=1e-12)
        assert sic == pytest.approx((20.0 + 2.0 * math.log(20.0)) / 20.0, abs=1e-12)
        assert hq == pytest.approx(
            (20.0 + 4.0 * math.log(math.log(20.0))) / 20.0, abs=1e-12)

    def test_tiny_sample_rejected(self):
        with pytest.raises((DegenerateSample, InsufficientObservations)):
            information_criteria(-1.0, 2, 1)
