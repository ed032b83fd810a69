"""Tests for exact univariate polynomials."""

from fractions import Fraction

import pytest

from denumerant.polyratio import RatPoly, arith, poly_gcd, rational_sqrt, to_fraction


class TestConstruction:

    def test_trailing_zeros_dropped(self):
        assert RatPoly([1, 0, 0]).degree == 0

    def test_zero_polynomial(self):
        zero = RatPoly()
        assert zero.is_zero
        assert zero.degree == -1
        assert zero.format() == "0"

    def test_string_coefficients(self):
        assert RatPoly(["1/2", 3]).coeffs == (Fraction(1, 2), Fraction(3))

    def test_bool_rejected(self):
        with pytest.raises(ValueError):
            to_fraction(True)


class TestArithmetic:

    def test_product(self):
        assert RatPoly([1, 1]) * RatPoly([-1, 1]) == RatPoly([-1, 0, 1])

    def test_integer_operands(self):
        assert RatPoly([1, 1]) * 3 + 1 == RatPoly([4, 3])

    def test_divmod(self):
        quot, rem = divmod(RatPoly([-1, 0, 1]), RatPoly([-1, 1]))
        assert quot == RatPoly([1, 1])
        assert rem.is_zero

    def test_divmod_remainder(self):
        quot, rem = divmod(RatPoly([1, 0, 1]), RatPoly([0, 1]))
        assert quot == RatPoly([0, 1])
        assert rem == RatPoly([1])

    def test_exact_division_fails_loudly(self):
        with pytest.raises(ArithmeticError):
            RatPoly([1, 0, 1]) / RatPoly([0, 1])

    def test_scalar_division(self):
        assert RatPoly([2, 4]) / 2 == RatPoly([1, 2])

    def test_power(self):
        assert RatPoly([1, 1]) ** 3 == RatPoly([1, 3, 3, 1])

    def test_gcd_is_monic(self):
        a = RatPoly([-1, 0, 1]) * 2
        b = RatPoly([1, 2, 1]) * 3
        assert poly_gcd(a, b) == RatPoly([1, 1])

    def test_arith_dispatch(self):
        assert arith("add", RatPoly([1]), RatPoly([0, 1])) == RatPoly([1, 1])
        assert arith("evaluate", RatPoly([1, 1]), 4) == 5
        with pytest.raises(ValueError):
            arith("frobnicate", RatPoly())


class TestEvaluation:

    def test_compose(self):
        assert RatPoly([0, 0, 1]).compose(RatPoly([1, 1])) == RatPoly([1, 2, 1])

    def test_compose_linear(self):
        # P_3 piece 0 at 2n + 1
        assert RatPoly([1, 3, 3]).compose_linear(2, 1) == RatPoly([7, 18, 12])

    def test_evaluate_int(self):
        assert RatPoly([1, 3, 3]).evaluate_int(2) == 19

    def test_evaluate_int_rejects_fractions(self):
        with pytest.raises(ArithmeticError):
            RatPoly([0, "1/2"]).evaluate_int(1)

    def test_derivative(self):
        assert RatPoly([5, 1, 1, 1]).derivative() == RatPoly([1, 2, 3])

    def test_integrality(self):
        assert RatPoly([1, 2]).is_integral()
        assert not RatPoly(["1/3", 2]).is_integral()
        assert RatPoly(["1/2", "1/3"]).denominator_lcm() == 6


class TestPresentation:

    def test_format(self):
        assert RatPoly([1, -3, 2]).format() == "2*n^2 - 3*n + 1"
        assert RatPoly([0, "1/2"]).format("m") == "1/2*m"
        assert RatPoly([-1]).format() == "-1"

    def test_to_strings(self):
        assert RatPoly([1, "-2/3"]).to_strings() == ["1/1", "-2/3"]

    def test_primitive(self):
        content, prim = RatPoly(["1/2", 1]).primitive()
        assert content == Fraction(1, 2)
        assert prim == RatPoly([1, 2])

    def test_rational_sqrt(self):
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rational_sqrt(Fraction(2)) is None
        assert rational_sqrt(Fraction(-1)) is None
