import cmath
import math

import numpy as np
import pytest

from mehlerfock.kernels import (
    TransformRequest,
    addition_formula_rhs,
    cosine_kernel,
    double_pole_kernel,
    kernel_catalog,
    rational_kernel_over_s,
    rational_kernel_times_s,
    reciprocal_kernel,
    transform_lhs,
    transform_rhs,
    verify_transform,
    wedge_difference_kernel,
)
from mehlerfock.legendre import legendre_p, legendre_q
from mehlerfock.scalars import DomainError, PoleError


def contour_residue(fn, pole, radius=0.05, n=512):
    """Trapezoid contour oracle for residues."""
    total = 0.0 + 0.0j
    for k in range(n):
        t = 2.0 * math.pi * k / n
        s = pole + radius * cmath.exp(1j * t)
        total += fn(s) * radius * cmath.exp(1j * t)
    return total / n


class TestCatalogStructure:
    def test_names(self):
        cat = kernel_catalog()
        assert set(cat) == {"reciprocal", "pole-pair", "rational-over-s",
                            "rational-times-s", "double-pole-zero",
                            "double-pole-unit"}

    def test_oddness_random_samples(self):
        rng = np.random.default_rng(42)
        kernels = list(kernel_catalog().values()) + [
            cosine_kernel(0.7), wedge_difference_kernel(2.0, 0.7, 1.1)]
        for kernel in kernels:
            for _ in range(100):
                s = complex(rng.uniform(0.2, 3.0), rng.uniform(-3.0, 3.0))
                gs, gm = kernel(s), kernel(-s)
                assert abs(gs + gm) <= 1e-9 * max(1.0, abs(gs))

    def test_axis_regularity(self):
        # s*g(s) has a finite limit at 0 equal to the zero residue
        for kernel in kernel_catalog().values():
            eps = 1e-7
            val = eps * 1j * kernel(1j * eps)
            assert abs(val - 1j * eps * 0 - complex(kernel.residue_at_zero) * 1.0) \
                <= 1e-5 * max(1.0, abs(kernel.residue_at_zero)) + 1e-6

    def test_axis_weight_matches_definition(self):
        # scaled weight = sin(i pi rho) g(i rho) exp(-pi rho) / pi
        rho = np.array([0.3, 1.0, 2.5])
        for kernel in list(kernel_catalog().values()) + [cosine_kernel(1.0)]:
            w = kernel.axis_weight_scaled(rho)
            for i, r in enumerate(rho):
                direct = (cmath.sin(1j * math.pi * r) * kernel(1j * r)
                          * math.exp(-math.pi * r) / math.pi)
                assert abs(w[i] - direct) <= 1e-12 * max(1.0, abs(direct))

    def test_empty_product_reduces_to_pole_pair(self):
        a = rational_kernel_times_s([], [1.0])
        b = kernel_catalog()["pole-pair"]
        for s in (0.3 + 0.4j, 2.0 - 1.0j):
            assert abs(a(s) - b(s)) < 1e-14

    def test_rational_residues_against_contour(self):
        k = rational_kernel_over_s([0.5], [1.0, 1.5])
        for pole in (1.0, 1.5):
            assert abs(k.residue(pole) - contour_residue(k.eval_fn, pole)) < 1e-10
        k2 = rational_kernel_times_s([0.5], [1.0, 1.5])
        for pole in (1.0, 1.5):
            assert abs(k2.residue(pole) - contour_residue(k2.eval_fn, pole)) < 1e-10

    def test_double_pole_residue_rule(self):
        # the kernel's own residue is 0 below the top power and 1/2 at it
        for (n, m, want) in [(1, 0, 0.0), (1, 1, 0.5), (2, 2, 0.0), (2, 3, 0.5)]:
            k = double_pole_kernel(1.3, n, m)
            got = contour_residue(k.eval_fn, 1.3, radius=0.2, n=2048)
            assert abs(got - want) < 1e-8
            assert k.residue(1.3) == want

    def test_double_pole_validation(self):
        with pytest.raises(DomainError):
            double_pole_kernel(1.0, 1, 2)  # 2m+1 >= 4n
        with pytest.raises(DomainError):
            double_pole_kernel(-1.0, 1, 0)

    def test_rational_validation(self):
        with pytest.raises(DomainError):
            rational_kernel_over_s([0.5], [])  # m < n
        with pytest.raises(DomainError):
            rational_kernel_over_s([], [1.0, 1.0])  # repeated
        with pytest.raises(DomainError):
            rational_kernel_times_s([], [-1.0])  # wrong half plane

    def test_cosine_type2_constant(self):
        k = cosine_kernel(0.0)
        assert k.decay_class == "II"
        assert abs(k.type2_constant - math.pi / 1j) < 1e-14
        assert cosine_kernel(0.5).decay_class == "I"

    def test_wedge_kernel_collision(self):
        k = wedge_difference_kernel(0.5 * math.pi, 0.3, 0.7)
        with pytest.raises(PoleError):
            k.poles_in(10.0)

    def test_wedge_kernel_residues_against_contour(self):
        k = wedge_difference_kernel(2.0, 0.7, 1.1)
        step = math.pi / 2.0
        for pole in (1.0, 2.0, step, 2 * step):
            assert abs(k.residue(pole) - contour_residue(k.eval_fn, pole)) < 1e-9

    def test_straight_angle_kernel_vanishes(self):
        k = wedge_difference_kernel(math.pi, 0.5, 1.0)
        assert k(0.3 + 0.4j) == 0.0
        assert k.poles_in(50.0) == []


class TestTransform:
    def test_reciprocal_closed_form(self):
        # single zero-order term; degree zero gives atanh(1/z)
        req = TransformRequest(reciprocal_kernel(), 0.0, 3.0, 2.0)
        lhs, err = transform_lhs(req)
        assert abs(lhs - math.atanh(1.0 / 3.0)) < 1e-9
        rhs, _ = transform_rhs(req)
        assert abs(rhs - legendre_p(0.0, 0.0, 2.0) * legendre_q(0.0, 0.0, 3.0)) < 1e-14

    def test_pole_pair_value(self):
        req = TransformRequest(kernel_catalog()["pole-pair"], 0.0, 3.0, 2.0)
        v = verify_transform(req)
        want = -legendre_p(0.0, -1.0, 2.0) * legendre_q(0.0, 1.0, 3.0)
        assert abs(v.rhs - want) < 1e-13
        assert v.residual <= 1e-8

    def test_cosine_right_angle_closed_form(self):
        # at a right angle the combined argument collapses to the product
        nu = 0.25
        req = TransformRequest(cosine_kernel(0.5 * math.pi), nu, 3.0, 2.0)
        lhs, _ = transform_lhs(req)
        assert abs(lhs - legendre_q(nu, 0.0, 6.0)) < 1e-9

    def test_lhs_symmetric_in_arguments(self):
        k = reciprocal_kernel()
        a, _ = transform_lhs(TransformRequest(k, 0.5, 3.0, 2.0))
        b, _ = transform_lhs(TransformRequest(k, 0.5, 2.0, 3.0))
        assert abs(a - b) <= 1e-8 * max(1.0, abs(a))

    def test_rhs_requires_ordering(self):
        with pytest.raises(DomainError):
            transform_rhs(TransformRequest(reciprocal_kernel(), 0.5, 2.0, 3.0))

    def test_type2_diagonal_raises(self):
        with pytest.raises(DomainError):
            transform_lhs(TransformRequest(cosine_kernel(0.0), 0.25, 2.0, 2.0))

    def test_double_pole_branches_verify(self):
        for name in ("double-pole-zero", "double-pole-unit"):
            v = verify_transform(
                TransformRequest(kernel_catalog()[name], 0.5, 3.0, 2.0))
            assert v.residual <= 1e-8

    def test_residue_tail_certificate_dominates(self):
        # certified tail must exceed the change seen on doubling the radius
        req = TransformRequest(cosine_kernel(2.0), 0.5, 3.0, 1.2)
        r1, tail1 = transform_rhs(req, pole_radius=20.0)
        r2, _ = transform_rhs(req, pole_radius=40.0)
        assert tail1 >= abs(r1 - r2)

    def test_degree_validation(self):
        with pytest.raises(DomainError):
            TransformRequest(reciprocal_kernel(), -1.5, 3.0, 2.0)
        with pytest.raises(DomainError):
            TransformRequest(reciprocal_kernel(), 0.5, 0.9, 2.0)


class TestAdditionFormula:
    def test_right_angle(self):
        got = addition_formula_rhs(0.3, 0.5 * math.pi, 3.0, 2.0)
        assert abs(got - legendre_q(0.3, 0.0, 6.0)) < 1e-14

    def test_degree_zero_closed_form(self):
        z, om, theta = 2.0, 1.5, 2.0 * math.pi / 3.0
        arg = om * z - math.sqrt(om * om - 1) * math.sqrt(z * z - 1) * math.cos(theta)
        got = addition_formula_rhs(0.0, theta, z, om)
        assert abs(got - math.atanh(1.0 / arg)) < 1e-14

    def test_divergent_configuration(self):
        with pytest.raises(DomainError):
            addition_formula_rhs(0.25, 0.0, 2.0, 2.0)

    def test_three_way_type1(self):
        nu, theta, z, om = 0.25, math.pi, 3.0, 2.0
        req = TransformRequest(cosine_kernel(theta), nu, z, om)
        lhs, _ = transform_lhs(req)
        rhs, _ = transform_rhs(req)
        closed = addition_formula_rhs(nu, theta, z, om)
        assert abs(lhs - closed) <= 1e-8 * max(1.0, abs(closed))
        assert abs(rhs - closed) <= 1e-8 * max(1.0, abs(closed))

    def test_type2_off_diagonal(self):
        nu, z, om = 0.25, 2.0, 1.5
        lhs, _ = transform_lhs(TransformRequest(cosine_kernel(0.0), nu, z, om))
        closed = addition_formula_rhs(nu, 0.0, z, om)
        assert abs(lhs - closed) <= 1e-6 * max(1.0, abs(closed))
