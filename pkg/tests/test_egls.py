import numpy as np
import pytest

from panelgls import (
    ModelSpec,
    PanelDataset,
    PeriodCovariance,
    egls_fit,
    estimate_period_covariance,
    ols_fit,
    pcse_covariance,
    period_sur_transform,
)
from panelgls.dataset import design_matrices
from panelgls.errors import SingularPeriodCovariance

from conftest import make_toy_panel
from oracles import pcse_loops, period_covariance_loops


class TestEstimatePeriodCovariance:
    def test_orthonormal_columns_give_identity(self):
        n, t = 8, 3
        q, _ = np.linalg.qr(np.random.default_rng(3).normal(size=(n, t)))
        resid = q * np.sqrt(n)  # columns orthonormal scaled by sqrt(N)
        cov = estimate_period_covariance(resid)
        np.testing.assert_allclose(cov.sigma, np.eye(t), atol=1e-12)

    def test_matches_double_loop_oracle(self, rng):
        resid = rng.normal(size=(28, 7))
        cov = estimate_period_covariance(resid)
        np.testing.assert_allclose(
            cov.sigma, period_covariance_loops(resid), atol=1e-12)

    def test_more_periods_than_units_rejected(self, rng):
        with pytest.raises(SingularPeriodCovariance):
            estimate_period_covariance(rng.normal(size=(5, 7)))

    def test_divisor_option(self, rng):
        resid = rng.normal(size=(12, 4))
        a = estimate_period_covariance(resid, divisor="n").sigma
        b = estimate_period_covariance(resid, divisor="n-1").sigma
        np.testing.assert_allclose(b * (11 / 12), a, atol=1e-14)


class TestPeriodSurTransform:
    def test_identity_covariance_is_identity_map(self, rng):
        y = rng.normal(size=(4, 3))
        x = rng.normal(size=(4, 3, 2))
        cov = PeriodCovariance(sigma=np.eye(3), source="supplied")
        y2, x2 = period_sur_transform(y, x, cov)
        np.testing.assert_allclose(y2, y, atol=1e-14)
        np.testing.assert_allclose(x2, x, atol=1e-14)

    def test_scalar_covariance_halves_rows(self, rng):
        y = rng.normal(size=(4, 3))
        x = rng.normal(size=(4, 3, 2))
        cov = PeriodCovariance(sigma=4.0 * np.eye(3), source="supplied")
        y2, x2 = period_sur_transform(y, x, cov)
        np.testing.assert_allclose(y2, y / 2.0, atol=1e-14)
        np.testing.assert_allclose(x2, x / 2.0, atol=1e-14)

    def test_two_period_hand_cholesky(self):
        sigma = np.array([[1.0, 0.5], [0.5, 1.0]])
        # L = [[1, 0], [0.5, sqrt(0.75)]]; L^-1 = [[1, 0], [-0.5/s, 1/s]]
        s = np.sqrt(0.75)
        l_inv = np.array([[1.0, 0.0], [-0.5 / s, 1.0 / s]])
        y = np.array([[2.0, 3.0]])
        x = np.array([[[1.0], [4.0]]])
        cov = PeriodCovariance(sigma=sigma, source="supplied")
        y2, x2 = period_sur_transform(y, x, cov)
        np.testing.assert_allclose(y2[0], l_inv @ y[0], atol=1e-12)
        np.testing.assert_allclose(x2[0, :, 0], l_inv @ x[0, :, 0], atol=1e-12)

    def test_asymmetric_sigma_rejected(self):
        with pytest.raises(SingularPeriodCovariance):
            PeriodCovariance(sigma=np.array([[1.0, 0.2], [0.3, 1.0]]), source="supplied")

    def test_indefinite_sigma_rejected(self):
        with pytest.raises(SingularPeriodCovariance):
            PeriodCovariance(sigma=np.array([[1.0, 2.0], [2.0, 1.0]]), source="supplied")


class TestPcse:
    def test_spherical_residuals_collapse_to_classical(self, rng):
        # build residual blocks whose period covariance is exactly s^2 I
        n_units, t, k = 9, 3, 2
        x = rng.normal(size=(n_units, t, k))
        q, _ = np.linalg.qr(rng.normal(size=(n_units, t)))
        resid = q * np.sqrt(n_units) * 1.7  # Omega = 1.7^2 I
        n = n_units * t
        cov = pcse_covariance(x, resid, n, k, df_corrected=False)
        xtx = np.einsum("itk,itl->kl", x, x)
        expected = 1.7 ** 2 * np.linalg.inv(xtx)
        np.testing.assert_allclose(cov, expected, atol=1e-10)

    def test_matches_triple_loop_oracle(self, rng):
        n_units, t, k = 3, 2, 2
        x = rng.normal(size=(n_units, t, k))
        resid = rng.normal(size=(n_units, t))
        n = n_units * t
        got = pcse_covariance(x, resid, n, k)
        want = pcse_loops(x, resid, n, k)
        np.testing.assert_allclose(got, want, atol=1e-12)

    def test_symmetric_psd_with_positive_diagonal(self, rng):
        x = rng.normal(size=(10, 4, 3))
        resid = rng.normal(size=(10, 4))
        cov = pcse_covariance(x, resid, 40, 3)
        np.testing.assert_allclose(cov, cov.T, atol=1e-14)
        assert np.all(np.linalg.eigvalsh(cov) > -1e-12)
        assert np.all(np.diag(cov) > 0)


def _toy_model(rng, n_units=10, n_periods=4):
    ds = make_toy_panel(rng, n_units, n_periods, names=("dep", "r1", "r2"))
    beta = np.array([0.8, -0.5])
    dep = (beta[0] * ds.matrix("r1") + beta[1] * ds.matrix("r2")
           + 3.0 + rng.normal(scale=0.7, size=(n_units, n_periods)))
    variables = dict(ds.variables)
    variables["dep"] = dep
    ds = PanelDataset(ds.cross_section_ids, ds.period_ids, variables)
    return ds, ModelSpec(dependent="dep", regressors=("r1", "r2"))


class TestEglsFit:
    def test_identity_override_equals_ols(self, rng):
        ds, spec = _toy_model(rng)
        y, x, _ = design_matrices(ds, spec)
        ident = PeriodCovariance(sigma=np.eye(ds.n_periods), source="supplied")
        fit = egls_fit(ds, spec, cov_override=ident)
        plain = ols_fit(y, x)
        np.testing.assert_allclose(fit.coefficients, plain.coefficients, atol=1e-12)
        np.testing.assert_allclose(fit.raw_residuals, plain.residuals, atol=1e-12)

    def test_dependent_rescaling_invariance(self, rng):
        ds, spec = _toy_model(rng)
        fit = egls_fit(ds, spec)
        scaled_vars = dict(ds.variables)
        scaled_vars["dep"] = ds.matrix("dep") * 3.5
        ds2 = PanelDataset(ds.cross_section_ids, ds.period_ids, scaled_vars)
        fit2 = egls_fit(ds2, spec)
        np.testing.assert_allclose(fit2.coefficients, fit.coefficients * 3.5, rtol=1e-9)
        np.testing.assert_allclose(fit2.std_errors, fit.std_errors * 3.5, rtol=1e-9)
        np.testing.assert_allclose(fit2.base.t_stats, fit.base.t_stats, rtol=1e-9)
        assert fit2.weighted_stats.r_squared == pytest.approx(
            fit.weighted_stats.r_squared, abs=1e-10)
        assert fit2.weighted_stats.f_stat == pytest.approx(
            fit.weighted_stats.f_stat, rel=1e-9)
        assert fit2.weighted_stats.durbin_watson == pytest.approx(
            fit.weighted_stats.durbin_watson, abs=1e-10)
        assert fit2.unweighted_stats.durbin_watson == pytest.approx(
            fit.unweighted_stats.durbin_watson, abs=1e-10)

    def test_unit_permutation_invariance(self, rng):
        ds, spec = _toy_model(rng)
        fit = egls_fit(ds, spec)
        # permute unit ids; canonical ordering restores identical blocks
        perm = rng.permutation(ds.n_units)
        renamed = {
            name: ds.matrix(name)[perm] for name in ds.variable_names()
        }
        ids = tuple(np.array(ds.cross_section_ids)[perm])
        ds2 = PanelDataset(ids, ds.period_ids, renamed)
        fit2 = egls_fit(ds2, spec)
        np.testing.assert_allclose(fit2.coefficients, fit.coefficients, atol=1e-10)
        np.testing.assert_allclose(fit2.std_errors, fit.std_errors, atol=1e-10)

    def test_weighted_fprob_consistency(self, rng):
        from panelgls.dists import f_upper_tail

        ds, spec = _toy_model(rng)
        fit = egls_fit(ds, spec)
        n, k = 40, 3
        assert fit.weighted_stats.f_prob == pytest.approx(
            f_upper_tail(fit.weighted_stats.f_stat, k - 1, n - k), abs=1e-12)

    def test_override_dimension_mismatch(self, rng):
        ds, spec = _toy_model(rng)
        bad = PeriodCovariance(sigma=np.eye(3), source="supplied")
        with pytest.raises(SingularPeriodCovariance):
            egls_fit(ds, spec, cov_override=bad)
