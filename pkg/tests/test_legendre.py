import cmath
import math

import numpy as np
import pytest

from mehlerfock.legendre import (
    asymp_p_imag_degree,
    asymp_p_large_nu,
    asymp_q_large_nu,
    bound_pq_product,
    bound_pq_product_mu_zero,
    bound_qq_product,
    identity_residuals,
    legendre_p,
    legendre_p_neg_order_via_integral,
    legendre_q,
    legendre_q_via_integral,
    pq_ladder_tail_bound,
    pq_product_term,
    product_asymp_mu,
    product_asymp_rho,
    q_product_scaled,
    tilde_argument,
    tilde_pair,
    whipple_residuals,
)
from mehlerfock.scalars import DomainError, PoleError

# spot values computed once with a 30-digit evaluation of the defining
# hypergeometric representation (mpmath), frozen here
FROZEN = {
    (0.5 + 1.0j, 0.25, 2.0, "p"): 0.589785588406192914 + 0.902547773840205113j,
    (0.5 + 1.0j, 0.25, 2.0, "q"): 0.172168744254221744 - 0.140046325248830078j,
    (1.0 / 3.0, 0.25, 3.0, "q"): 0.114627862778373462 + 0.114627862778373462j,
    (0.5, 1.0j, 1.5, "q"): 0.0101552145051155793 + 0.00155705667204297355j,
}


class TestFirstKind:
    def test_degree_zero_is_one(self):
        for z in (1.5, 4.0, 2.0 + 1.0j):
            assert abs(legendre_p(0.0, 0.0, z) - 1.0) < 1e-14

    def test_near_one_limit(self):
        # order zero tends to 1 at the lower end of the domain
        for nu in (0.3, 1.7, 0.5 + 2.0j):
            assert abs(legendre_p(nu, 0.0, 1.0 + 1e-9) - 1.0) < 1e-6

    def test_degree_one_is_argument(self):
        assert abs(legendre_p(1.0, 0.0, 2.5) - 2.5) < 1e-14

    def test_frozen_value(self):
        got = legendre_p(0.5 + 1.0j, 0.25, 2.0)
        assert abs(got - FROZEN[(0.5 + 1.0j, 0.25, 2.0, "p")]) < 1e-13

    def test_cut_raises(self):
        with pytest.raises(DomainError):
            legendre_p(0.5, 0.0, 0.3)


class TestSecondKind:
    def test_degree_zero_closed_form(self):
        # area-hyperbolic tangent of the reciprocal argument
        assert abs(legendre_q(0.0, 0.0, 2.0) - math.atanh(0.5)) < 1e-14

    def test_degree_one_closed_form(self):
        z = 2.0
        assert abs(legendre_q(1.0, 0.0, z) - (z * math.atanh(1 / z) - 1.0)) < 1e-14

    def test_decay_at_infinity(self):
        assert abs(legendre_q(0.0, 0.0, 1e6)) < 1e-5

    def test_frozen_values(self):
        for (nu, mu, z, kind), want in FROZEN.items():
            if kind != "q":
                continue
            assert abs(legendre_q(nu, mu, z) - want) < 1e-13

    def test_excluded_parameters_raise(self):
        with pytest.raises(PoleError):
            legendre_q(0.0, -1.0, 2.0)
        with pytest.raises(PoleError):
            legendre_q(-2.5, 0.5, 2.0)

    def test_near_one_switches_route(self):
        # just above the cut end the two routes must agree
        direct = legendre_q(0.5, 0.0, 1.0005)
        via_int = legendre_q_via_integral(0.5, 0.0, 1.0005)
        assert abs(direct - via_int) < 1e-10 * abs(direct)


class TestIntegralRepresentations:
    def test_q_degree_zero(self):
        assert abs(legendre_q_via_integral(0.0, 0.0, 2.0) - math.atanh(0.5)) < 1e-12

    @pytest.mark.parametrize("nu,mu,z", [(0.5, 0.0, 3.0), (0.0, 1.0, 2.0),
                                         (1.0 / 3.0, 0.5 + 1.0j, 1.7)])
    def test_q_cross_check(self, nu, mu, z):
        a = legendre_q_via_integral(nu, mu, z)
        b = legendre_q(nu, mu, z)
        assert abs(a - b) <= 1e-10 * abs(b)

    def test_q_preconditions(self):
        with pytest.raises(DomainError):
            legendre_q_via_integral(0.5, -0.5, 2.0)
        with pytest.raises(DomainError):
            legendre_q_via_integral(-1.5, 0.0, 2.0)

    def test_p_degree_zero(self):
        assert abs(legendre_p_neg_order_via_integral(0.0, 0.0, 1.0) - 1.0) < 1e-12

    def test_p_degree_one(self):
        assert abs(legendre_p_neg_order_via_integral(1.0, 0.0, 1.0)
                   - math.cosh(1.0)) < 1e-12

    def test_p_cross_check(self):
        a = legendre_p_neg_order_via_integral(0.5, 1.0, 0.5)
        b = legendre_p(0.5, -1.0, math.cosh(0.5))
        assert abs(a - b) <= 1e-9 * max(abs(b), 1e-10)


class TestTilde:
    def test_closed_form(self):
        for x in (1.1, 2.0, 10.0):
            t = tilde_argument(x)
            assert abs(math.cosh(t) - x / math.sqrt(x * x - 1.0)) < 1e-13

    def test_sinh_quarter_power_relation(self):
        for x in (1.5, 2.0, 7.0):
            t = tilde_argument(x)
            assert abs(1.0 / math.sqrt(math.sinh(t)) - (x * x - 1.0) ** 0.25) < 1e-12

    def test_order_reversal(self):
        zt, omt = tilde_pair(3.0, 2.0)
        assert zt < omt  # larger argument gives smaller dual variable

    def test_domain(self):
        with pytest.raises(DomainError):
            tilde_argument(1.0)


class TestIdentities:
    def test_reference_point(self):
        res = identity_residuals(1.0 / 3.0, 0.25, 2.0, 3.0)
        assert all(v <= 1e-9 for v in res.values())

    def test_zero_order_collapse(self):
        res = identity_residuals(0.7, 0.0, 2.0, 3.0)
        # with no order the first-kind connection reduces to P - P
        assert res["p_order_connection"] <= 1e-14

    def test_complex_degree(self):
        res = identity_residuals(-0.5 + 2.0j, 0.6, 1.5, 5.0)
        assert all(v <= 1e-9 for v in res.values())


class TestWhipple:
    def test_basic_point(self):
        res = whipple_residuals(0.0, 0.0, 2.0)
        assert res["excluded"]  # degree+order is a non-negative integer here
        assert res["q_as_p"] <= 1e-9
        assert res["p_as_q"] <= 1e-9

    def test_imaginary_order(self):
        res = whipple_residuals(0.25, 1.0j, 3.0)
        assert not res["excluded"]
        assert res["q_as_p"] <= 1e-9
        assert res["p_as_q"] <= 1e-9

    def test_needs_right_half_plane(self):
        with pytest.raises(DomainError):
            whipple_residuals(0.25, 0.0, -2.0 + 1.0j)


class TestProductMachinery:
    def test_scaled_product_matches_factors(self):
        nu, z, om = 0.5, 2.0, 1.5
        for rho in (0.0, 0.7, 3.0):
            got = complex(q_product_scaled(nu, z, om, np.array([rho]))[0])
            ref = (legendre_q(nu, -1j * rho, z) * legendre_q(nu, 1j * rho, om)
                   * math.exp(math.pi * rho))
            assert abs(got - ref) <= 1e-11 * abs(ref)

    def test_real_valued_products(self):
        # opposite imaginary orders give a real product for real data
        for nu in (0.0, 0.5, 1.2):
            for rho in (0.5, 2.0, 8.0, 30.0):
                val = complex(q_product_scaled(nu, 2.0, 1.5, np.array([rho]))[0])
                assert abs(val.imag) <= 1e-11 * abs(val)

    def test_route_continuity(self):
        # the defining-series route and the exchanged route must agree where
        # they hand over
        nu, z, om = 0.25, 3.0, 2.0
        rho = np.linspace(8.0, 40.0, 33)
        vals = q_product_scaled(nu, z, om, rho)
        diffs = np.abs(np.diff(vals))
        assert np.all(diffs < 1.0)  # no jump at the switch

    def test_product_term_stable_at_large_order(self):
        # log-combined product where the factors alone overflow
        term = pq_product_term(0.5, 300.0, 2.0, 3.0)
        assert np.isfinite(abs(term))
        lead = product_asymp_mu(0.5, 3.0, 2.0, 300.0)
        assert abs(term / lead - 1.0) < 0.01


class TestAsymptotics:
    def test_q_ratio_at_moderate_degree(self):
        nu = 40.0
        exact = legendre_q(nu, 0.0, math.cosh(1.0))
        lead = asymp_q_large_nu(nu, 0.0, 1.0)
        assert abs(exact / lead - 1.0) <= 5.0 / nu

    def test_imag_degree_ratio(self):
        from mehlerfock.legendre import _p_half_imag_batch
        rho = 50.0
        exact = complex(_p_half_imag_batch(complex(-0.5), 1.0, np.array([rho]))[0])
        lead = asymp_p_imag_degree(rho, 0.0, 1.0)
        assert abs(exact / lead - 1.0) <= 0.1

    def test_large_degree_halving(self):
        d30 = abs(legendre_p(30.0, 0.5, math.cosh(2.0))
                  / asymp_p_large_nu(30.0, 0.5, 2.0) - 1.0)
        d60 = abs(legendre_p(60.0, 0.5, math.cosh(2.0))
                  / asymp_p_large_nu(60.0, 0.5, 2.0) - 1.0)
        assert 0.375 <= d60 / d30 <= 0.625  # halves within +-25%

    def test_product_ratios(self):
        for mu in (20.0, 40.0, 80.0):
            ratio = pq_product_term(0.0, mu, 2.0, 3.0) / product_asymp_mu(0.0, 3.0, 2.0, mu)
            assert abs(ratio - 1.0) <= 10.0 / mu
        for rho in (20.0, 40.0, 80.0):
            scaled = complex(q_product_scaled(0.0, 3.0, 2.0, np.array([rho]))[0])
            exact = 1j * (-math.expm1(-2 * math.pi * rho)) / (2 * math.pi) * scaled
            ratio = exact / product_asymp_rho(0.0, 3.0, 2.0, rho)
            assert abs(ratio - 1.0) <= 10.0 / rho

    def test_regime_validation(self):
        with pytest.raises(DomainError):
            asymp_q_large_nu(-5.0, 0.0, 1.0)
        with pytest.raises(DomainError):
            asymp_p_large_nu(-2.0, 0.0, 1.0)
        with pytest.raises(DomainError):
            asymp_p_imag_degree(-1.0, 0.0, 1.0)


class TestBounds:
    def test_pointwise_domination(self):
        for (nu, rho, z, om) in [(0.0, 1.0, 2.0, 3.0), (0.5, 5.0, 1.5, 5.0),
                                 (-0.75, 2.0, 1.2, 1.3)]:
            prod = abs(complex(q_product_scaled(nu, z, om, np.array([rho]))[0])
                       ) * math.exp(-math.pi * rho)
            assert prod <= bound_qq_product(nu, rho, z, om)

    def test_exponential_factor_visible(self):
        # the bound at imaginary-order magnitude 10 carries exp(-10 pi)
        b0 = bound_qq_product(0.0, 0.0, 2.0, 3.0)
        b10 = bound_qq_product(0.0, 10.0, 2.0, 3.0)
        poly = (1.0 + 10.0) ** 1.0  # degree-dependent polynomial growth
        assert b10 <= b0 * poly * math.exp(-10.0 * math.pi) * 1.0001

    def test_regime_gap(self):
        with pytest.raises(DomainError):
            bound_qq_product(-1.2, 1.0, 2.0, 3.0)

    def test_mixed_bound_examples(self):
        assert (abs(legendre_p(0.5, -2.0, math.cosh(0.1))
                    * legendre_q(0.5, 2.0, math.cosh(1.0)))
                <= bound_pq_product(0.5, 2.0, 0.1, 1.0))
        # order-zero variant
        nu, a, b = 1.0, 1.0, 1.0
        prod = abs(legendre_p(nu, 0.0, math.cosh(a)) * legendre_q(nu, 0.0, math.cosh(b)))
        assert prod <= bound_pq_product_mu_zero(nu, a, b)

    def test_small_radius_scaling(self):
        # the bound vanishes like sinh(a/2)^mu as the radius closes
        mu = math.pi / 2.0
        b1 = bound_pq_product(0.5, mu, 1e-2, 1.0)
        b2 = bound_pq_product(0.5, mu, 5e-3, 1.0)
        assert b2 / b1 == pytest.approx(0.5 ** mu, rel=1e-2)

    def test_ladder_tail_certificate(self):
        tail = pq_ladder_tail_bound(0.5, 0.3, 1.0, math.pi / 2.0, math.pi / 2.0)
        assert 0.0 < tail < math.inf
        # certificate really dominates the actual ladder remainder
        actual = sum(abs(2.0 * pq_product_term(0.5, mu, math.cosh(0.3), math.cosh(1.0)))
                     for mu in np.arange(math.pi / 2.0, 40.0, math.pi / 2.0))
        assert tail >= actual

    def test_ladder_tail_unavailable(self):
        assert pq_ladder_tail_bound(0.5, 2.5, 1.0, 1.0, 1.0) == math.inf
