import math

import numpy as np
import pytest

from panelgls.dists import (
    chi_sq_upper_tail,
    f_upper_tail,
    normal_cdf,
    normal_two_tailed_prob,
    t_two_tailed_prob,
)
from panelgls.errors import DomainError


class TestChiSqUpperTail:
    def test_zero_statistic_is_full_mass(self):
        for dof in (1, 2, 5, 50):
            assert chi_sq_upper_tail(0.0, dof) == 1.0

    def test_dof2_closed_form(self):
        # at two degrees of freedom the tail is exactly exp(-x/2)
        for x in (0.5, 2.0, 7.0, 30.0):
            assert chi_sq_upper_tail(x, 2) == pytest.approx(math.exp(-x / 2), abs=1e-12)

    def test_bpg_probability_value(self):
        assert chi_sq_upper_tail(196 * 0.038797, 3) == pytest.approx(0.054943, abs=5e-6)

    def test_negative_statistic_rejected(self):
        with pytest.raises(DomainError):
            chi_sq_upper_tail(-0.1, 3)

    def test_dof_below_one_rejected(self):
        with pytest.raises(DomainError):
            chi_sq_upper_tail(1.0, 0)

    def test_monotone_nonincreasing(self):
        xs = np.linspace(0.0, 40.0, 200)
        for dof in (1, 3, 10):
            values = [chi_sq_upper_tail(float(x), dof) for x in xs]
            assert all(a >= b - 1e-15 for a, b in zip(values, values[1:]))


class TestFUpperTail:
    def test_zero_is_one(self):
        assert f_upper_tail(0.0, 3, 192) == 1.0

    def test_aux_regression_f_probability(self):
        assert f_upper_tail(2.583198, 3, 192) == pytest.approx(0.054628, abs=5e-6)

    def test_large_f_is_negligible(self):
        assert f_upper_tail(65.92667, 3, 192) < 1e-6

    def test_matches_t_squared_identity(self):
        # F(1, d) beyond t^2 equals the two-tailed t probability
        for t, d in ((1.3, 7), (2.5, 41), (0.4, 3)):
            assert f_upper_tail(t * t, 1, d) == pytest.approx(
                t_two_tailed_prob(t, d), abs=1e-12)

    def test_monotone_nonincreasing(self):
        xs = np.linspace(0.0, 10.0, 100)
        values = [f_upper_tail(float(x), 4, 60) for x in xs]
        assert all(a >= b - 1e-15 for a, b in zip(values, values[1:]))

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            f_upper_tail(-1.0, 2, 2)
        with pytest.raises(DomainError):
            f_upper_tail(1.0, 0, 2)


class TestTTwoTailed:
    def test_zero_is_one(self):
        assert t_two_tailed_prob(0.0, 5) == 1.0

    def test_sign_symmetric(self):
        for t, d in ((1.7, 9), (0.3, 2), (4.2, 100)):
            assert t_two_tailed_prob(t, d) == pytest.approx(
                t_two_tailed_prob(-t, d), abs=1e-15)

    def test_reported_coefficient_probabilities(self):
        assert t_two_tailed_prob(3.428753, 192) == pytest.approx(0.0007, abs=1e-4)
        assert t_two_tailed_prob(-2.867219, 192) == pytest.approx(0.0046, abs=1e-4)

    def test_cauchy_closed_form(self):
        # dof 1 is Cauchy: 2P(T>|t|) = 1 - (2/pi) arctan(t)
        for t in (0.5, 1.0, 3.0):
            expected = 1.0 - 2.0 / math.pi * math.atan(t)
            assert t_two_tailed_prob(t, 1) == pytest.approx(expected, abs=1e-12)

    def test_dof2_closed_form(self):
        for t in (0.5, 1.0, 2.0):
            expected = 1.0 - t / math.sqrt(2.0 + t * t)
            assert t_two_tailed_prob(t, 2) == pytest.approx(expected, abs=1e-12)


class TestNormal:
    def test_cdf_symmetry(self):
        assert normal_cdf(0.0) == pytest.approx(0.5, abs=1e-15)
        for z in (0.5, 1.0, 2.5):
            assert normal_cdf(z) + normal_cdf(-z) == pytest.approx(1.0, abs=1e-14)

    def test_known_quantile(self):
        assert normal_cdf(-1.6448536269514722) == pytest.approx(0.05, abs=1e-10)

    def test_two_tailed(self):
        assert normal_two_tailed_prob(1.959963984540054) == pytest.approx(0.05, abs=1e-10)
