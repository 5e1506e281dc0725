from fractions import Fraction

import pytest

from chebident.families import Family, FamilySpec, family_poly
from chebident.laurent import LaurentPoly
from chebident.series import (
    TruncatedSeries,
    denominator_series,
    gf_expand,
    x_minus_t_inverse_pow,
    x_minus_t_pow,
)

ONE = LaurentPoly.one()
X = LaurentPoly.x_power(1)


def series(coeffs, order=None):
    return TruncatedSeries(coeffs, order)


def u(n):
    return family_poly(FamilySpec(Family.U), n)


def F(order):
    return denominator_series(order).inverse()


class TestArithmetic:
    def test_mul_example(self):
        a = series([1, 1], 2)  # 1 + t
        b = series([1, -1], 2)  # 1 - t
        assert a * b == series([1, 0, -1], 2)

    def test_mul_identity(self):
        a = series([u(0), u(1), u(2)], 2)
        assert a * TruncatedSeries.one(2) == a

    def test_mul_truncates_to_shorter(self):
        a = series([1, 1, 1, 1], 3)
        b = series([1, 1], 1)
        assert (a * b).order == 1
        assert (a + b).order == 1

    def test_inverse_round_trip_with_denominator(self):
        for order in (4, 12, 32):
            f = F(order)
            assert f * denominator_series(order) == TruncatedSeries.one(order)

    def test_mul_commutes_and_associates(self):
        a = series([ONE, X, 2 * X], 5)
        b = series([X, ONE], 5)
        c = series([LaurentPoly({-1: 1}), ONE, X * X], 5)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


class TestInverse:
    def test_geometric(self):
        g = series([1, -1], 3)  # 1 - t
        assert g.inverse() == series([1, 1, 1, 1], 3)

    def test_chebyshev_second_kind_coefficient(self):
        # the t^2 coefficient of 1/(1-2xt+t^2) equals U_2 = 2x*U_1 - U_0
        assert F(4).coefficient(2) == LaurentPoly({2: 4, 0: -1})

    def test_involution(self):
        a = series([2, X, LaurentPoly({1: -1, 0: 3})], 2)
        assert a.inverse().inverse() == a

    def test_keeps_integer_coefficients(self):
        # inverting a unit-constant integer series must not leak Fractions
        f = F(6)
        for coeff in f.coeffs:
            assert all(isinstance(c, int) for c in coeff.terms.values())

    def test_rejects_zero_constant(self):
        with pytest.raises(ValueError):
            series([0, 1], 2).inverse()

    def test_rejects_nonconstant_leading_coefficient(self):
        with pytest.raises(ValueError):
            series([X, 1], 2).inverse()


class TestPow:
    def test_power_one(self):
        a = series([1, 2, 3], 2)
        assert a.pow(1) == a

    def test_square(self):
        assert series([1, 1], 2).pow(2) == series([1, 2, 1], 2)

    def test_square_of_f_is_u_convolution(self):
        # [t^n] F^2 = sum_l U_l U_{n-l}; the right side is built from the
        # recurrence-generated polynomials, independently of cauchy_mul
        f2 = F(12).pow(2)
        for n in range(13):
            expected = LaurentPoly.zero()
            for l in range(n + 1):
                expected = expected + u(l) * u(n - l)
            assert f2.coefficient(n) == expected

    def test_rejects_nonpositive_power(self):
        with pytest.raises(ValueError):
            series([1, 1], 1).pow(0)


class TestDerivative:
    def test_example(self):
        assert series([1, 3, 1], 2).derivative_t() == series([3, 2], 1)

    def test_constant_series(self):
        assert series([5, 0, 0], 2).derivative_t() == TruncatedSeries.zero(1)

    def test_rejects_order_zero(self):
        with pytest.raises(ValueError):
            series([1], 0).derivative_t()

    @pytest.mark.parametrize("order", [4, 9, 16])
    def test_derivative_of_f_identity(self, order):
        # d/dt F = 2(x - t) F^2 holds exactly at every truncation order
        f = F(order)
        rhs = 2 * (x_minus_t_pow(1, order) * f.pow(2))
        assert f.derivative_t() == rhs.truncate(order - 1)

    def test_weighted_u_expansion(self):
        # (1 - t^2) F^2 has t^n coefficient (n+1) U_n
        order = 32
        g = series([1, 0, -1], order) * F(order).pow(2)
        for n in range(order + 1):
            assert g.coefficient(n) == (n + 1) * u(n)


class TestXMinusTPowers:
    def test_inverse_power_k1(self):
        s = x_minus_t_inverse_pow(1, 5)
        for m in range(6):
            assert s.coefficient(m) == LaurentPoly.x_power(-1 - m)

    def test_inverse_power_k2_linear_term(self):
        assert x_minus_t_inverse_pow(2, 3).coefficient(1) == LaurentPoly.x_power(-3, 2)

    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_inverse_round_trip(self, k):
        order = 16
        prod = x_minus_t_inverse_pow(k, order) * x_minus_t_pow(k, order)
        assert prod == TruncatedSeries.one(order)

    def test_positive_power_is_binomial_expansion(self):
        assert x_minus_t_pow(2, 4) == series(
            [LaurentPoly({2: 1}), LaurentPoly({1: -2}), ONE], 4
        )

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            x_minus_t_inverse_pow(0, 4)


class TestGfExpand:
    @pytest.mark.parametrize(
        "kind,n,expected",
        [
            (Family.U, 1, {1: 2}),
            (Family.W, 1, {1: 2, 0: 1}),
            (Family.V, 1, {1: 2, 0: -1}),
            (Family.T_GF, 2, {2: 4, 0: -2}),
            (Family.LEGENDRE, 2, {2: Fraction(3, 2), 0: Fraction(-1, 2)}),
        ],
    )
    def test_base_coefficients(self, kind, n, expected):
        assert gf_expand(kind, 1, 4).coefficient(n) == LaurentPoly(expected)

    @pytest.mark.parametrize("kind", [Family.T_GF, Family.U, Family.V, Family.W, Family.LEGENDRE])
    @pytest.mark.parametrize("alpha", [2, 3, 4, 5])
    def test_power_consistency(self, kind, alpha):
        order = 24
        assert gf_expand(kind, alpha, order) == gf_expand(kind, 1, order).pow(alpha)

    def test_rejects_bad_alpha(self):
        with pytest.raises(ValueError):
            gf_expand(Family.U, 0, 4)

    def test_rejects_classical_kind(self):
        with pytest.raises(ValueError):
            gf_expand(Family.T_CLASSICAL, 1, 4)


class TestConstruction:
    def test_pads_to_order(self):
        s = series([1], 3)
        assert s.order == 3
        assert s.coefficient(3) == LaurentPoly.zero()

    def test_coefficient_bounds(self):
        with pytest.raises(IndexError):
            series([1, 2], 1).coefficient(2)

    def test_truncate(self):
        s = series([1, 2, 3], 2)
        assert s.truncate(1) == series([1, 2], 1)
        with pytest.raises(ValueError):
            s.truncate(5)

    def test_rejects_float_coefficients(self):
        with pytest.raises(TypeError):
            series([1.5], 1)
