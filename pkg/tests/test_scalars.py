import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mehlerfock.scalars import (
    ConvergenceError,
    DomainError,
    PoleError,
    gamma,
    gamma_ratio_asymptotic,
    hyp2f1_regularized,
    pochhammer,
    principal_log,
    principal_pow,
)


def series_oracle(a, b, c, z, terms=400):
    """Term-by-term regularized sum, the independent reference for |z| < 1."""
    from scipy.special import rgamma

    total = 0.0 + 0.0j
    num = 1.0 + 0.0j
    for k in range(terms):
        total += num * complex(rgamma(c + k))
        num *= (a + k) * (b + k) * z / (k + 1)
    return total


class TestPrincipalBranch:
    def test_log_unity(self):
        assert principal_log(1.0) == 0.0

    def test_log_e(self):
        assert abs(principal_log(math.e) - 1.0) < 1e-15

    def test_log_i(self):
        assert abs(principal_log(1j) - 0.5j * math.pi) < 1e-15

    def test_log_cut_raises(self):
        with pytest.raises(DomainError):
            principal_log(-2.0)
        with pytest.raises(DomainError):
            principal_log(0.0)

    def test_pow_examples(self):
        assert abs(principal_pow(4.0, 0.5) - 2.0) < 1e-15
        assert principal_pow(3.7 - 0.2j, 0.0) == 1.0
        assert abs(principal_pow(1j, 2.0) + 1.0) < 1e-15

    def test_pow_cut_raises(self):
        with pytest.raises(DomainError):
            principal_pow(-1.0, 0.5)

    @given(st.floats(0.05, 50.0), st.floats(-math.pi + 1e-6, math.pi - 1e-6))
    @settings(max_examples=50, deadline=None)
    def test_pow_log_roundtrip(self, r, phi):
        z = cmath.rect(r, phi)
        assert abs(cmath.exp(principal_log(z)) - z) <= 1e-13 * abs(z)


class TestGammaFamily:
    def test_values(self):
        assert abs(gamma(1.0) - 1.0) < 1e-15
        assert abs(gamma(5.0) - 24.0) < 1e-13
        assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-15

    def test_pole_raises(self):
        for z in (0.0, -1.0, -7.0):
            with pytest.raises(PoleError):
                gamma(z)

    @given(st.complex_numbers(max_magnitude=20.0, allow_nan=False,
                              allow_infinity=False))
    @settings(max_examples=120, deadline=None)
    def test_functional_equation(self, z):
        if min(abs(z - k) for k in range(-21, 1)) < 0.05:
            return
        lhs = gamma(z + 1.0)
        assert abs(lhs - z * gamma(z)) <= 1e-12 * abs(lhs)

    def test_functional_equation_grid(self):
        # deterministic sweep of 1000 points within |z| <= 20
        rng = np.random.default_rng(20240817)
        count = 0
        while count < 1000:
            z = complex(*rng.uniform(-14, 14, size=2))
            if abs(z) > 20 or min(abs(z - k) for k in range(-21, 1)) < 0.05:
                continue
            lhs = gamma(z + 1.0)
            assert abs(lhs - z * gamma(z)) <= 1e-12 * abs(lhs)
            count += 1

    def test_reflection_pair_on_critical_line(self):
        for rho in np.linspace(0.0, 5.0, 21):
            lhs = gamma(0.5 + 1j * rho) * gamma(0.5 - 1j * rho)
            rhs = math.pi / cmath.cos(math.pi * 1j * rho)
            assert abs(lhs - rhs) <= 1e-10 * abs(rhs)

    def test_pochhammer_values(self):
        assert pochhammer(0.3 - 2.0j, 0) == 1.0
        assert abs(pochhammer(1.0, 4) - 24.0) < 1e-13
        assert abs(pochhammer(2.0, 3) - 24.0) < 1e-13

    def test_pochhammer_bad_index(self):
        with pytest.raises(DomainError):
            pochhammer(1.0, -1)

    @given(st.complex_numbers(max_magnitude=10.0, allow_nan=False,
                              allow_infinity=False),
           st.integers(0, 20))
    @settings(max_examples=80, deadline=None)
    def test_pochhammer_gamma_consistency(self, z, k):
        if any(min(abs(z + j - m) for m in range(-35, 1)) < 0.05
               for j in (0, k)):
            return
        lhs = pochhammer(z, k)
        rhs = gamma(z + k) / gamma(z)
        assert abs(lhs - rhs) <= 1e-11 * max(abs(lhs), abs(rhs), 1e-30)


class TestGammaRatioAsymptotic:
    def test_equal_shifts(self):
        assert gamma_ratio_asymptotic(3.0 + 1.0j, 0.7, 0.7) == 1.0

    def test_integer_shift_exact(self):
        # the functional equation makes the degree-1 case exact
        assert abs(gamma_ratio_asymptotic(100.0, 1.0, 0.0) - 100.0) < 1e-12
        assert abs(gamma(101.0) / gamma(100.0) - 100.0) < 1e-10

    def test_fractional_shift_approaches_exact(self):
        got = gamma_ratio_asymptotic(50.0, 0.5, -0.25)
        exact = gamma(50.5) / gamma(49.75)
        assert abs(got / exact - 1.0) < 0.02

    def test_negative_axis_rejected(self):
        with pytest.raises(DomainError):
            gamma_ratio_asymptotic(-5.0, 1.0, 0.0)


class TestHyp2F1Regularized:
    def test_zero_argument(self):
        c = 0.7 - 0.3j
        got = hyp2f1_regularized(1.3, -0.2j, c, 0.0)
        assert abs(got - 1.0 / gamma(c)) < 1e-14

    def test_log_case_value(self):
        # series oracle at |z| < 1 pins the classical logarithmic sum
        got = hyp2f1_regularized(1.0, 1.0, 2.0, 0.5)
        oracle = series_oracle(1.0, 1.0, 2.0, 0.5)
        assert abs(got - oracle) < 1e-14
        assert abs(got - 2.0 * math.log(2.0)) < 5e-15

    def test_terminating_polynomial(self):
        b, c, z = 1.7, 2.4, 0.35 + 0.1j
        got = hyp2f1_regularized(-1.0, b, c, z)
        expect = (1.0 - (b / c) * z) / gamma(c)
        assert abs(got - expect) < 1e-14

    def test_cut_raises(self):
        with pytest.raises(DomainError):
            hyp2f1_regularized(0.5, 0.5, 1.5, 1.2)

    @pytest.mark.parametrize("a,b,c", [(0.3, 1.1, 0.8), (0.5 + 0.4j, 1.0, 2.0),
                                       (-0.7, 2.2, 1.3)])
    def test_matches_series_inside_half_disk(self, a, b, c):
        for z in (0.45, -0.5, 0.3 + 0.35j):
            got = hyp2f1_regularized(a, b, c, z)
            assert abs(got - series_oracle(a, b, c, z)) <= 1e-12 * max(1.0, abs(got))

    def test_entire_in_c_at_nonpositive_integers(self):
        # continuity across the would-be poles of the unregularized function
        for m in (0, 1, 2, 3):
            for z in (0.4, -0.5, 0.25j):
                at_pole = hyp2f1_regularized(0.7, 1.9, -float(m), z)
                near = hyp2f1_regularized(0.7, 1.9, -float(m) + 1e-6, z)
                assert abs(at_pole - near) <= 1e-5 * max(abs(at_pole), 1e-30)

    def test_continuation_consistent_with_series(self):
        # evaluate in the overlap |z| just below the direct radius through
        # each continuation arm by nudging the argument outward
        a, b, c = 0.4, 1.3, 1.9
        for z in (-4.0, -12.0, 0.8 + 0.35j, 0.95j):
            got = hyp2f1_regularized(a, b, c, z)
            # Euler transformation gives an independent equivalent value
            w = z / (z - 1.0)
            alt = (1.0 - z) ** (-a) * hyp2f1_regularized(a, c - b, c, w)
            assert abs(got - alt) <= 1e-11 * max(1.0, abs(got))

    def test_vectorized_orders_match_scalar(self):
        rho = np.linspace(0.0, 8.0, 17)
        a = 1.1 + 0.5j * rho
        b = 0.6 + 0.5j * rho
        got = hyp2f1_regularized(a, b, 1.75, 0.3)
        for i in (0, 7, 16):
            single = hyp2f1_regularized(complex(a[i]), complex(b[i]), 1.75, 0.3)
            assert abs(got[i] - single) <= 1e-13 * max(1.0, abs(single))

    def test_unreachable_argument_raises(self):
        with pytest.raises(ConvergenceError):
            hyp2f1_regularized(np.array([0.5]), np.array([0.5]), 1.0, -80.0 + 0.5j)
