"""Tests for bivariate polynomials, interpolation, discriminants and factoring."""

import random
from fractions import Fraction

import pytest
import sympy

from denumerant.errors import (
    DegreeUnsupported,
    DuplicateAbscissa,
    InconsistentPoints,
    NonIntegerCoefficients,
    ZeroPolynomial,
)
from denumerant.polyratio import (
    BiPoly,
    RatPoly,
    bifactor_search,
    discriminant,
    discriminant_closed_form,
    interpolate,
    no_solutions_mod_p,
    perfect_square_root,
    squarefree_decompose,
)


@pytest.fixture
def split_conic():
    """m^2 + m - n^2 - n = (m - n)(m + n + 1)."""
    return BiPoly.from_separated(RatPoly([0, 1, 1]), RatPoly([0, 1, 1]))


# ============================================================================
# BiPoly
# ============================================================================

class TestBiPoly:

    def test_from_terms_and_evaluate(self):
        f = BiPoly.from_terms({(2, 0): 1, (0, 1): -3, (0, 0): 2})
        assert f.evaluate(3, 2) == 5
        assert f.deg_m == 2
        assert f.deg_n == 1

    def test_from_separated(self, split_conic):
        assert split_conic.evaluate(4, 4) == 0
        assert split_conic.evaluate(2, 1) == 4

    def test_swap(self):
        f = BiPoly.from_terms({(2, 1): 5, (0, 0): 1})
        assert f.swap() == BiPoly.from_terms({(1, 2): 5, (0, 0): 1})

    def test_product_and_hash(self):
        a = BiPoly.from_terms({(1, 0): 1, (0, 1): -1})
        b = BiPoly.from_terms({(1, 0): 1, (0, 1): 1, (0, 0): 1})
        assert a * b == BiPoly.from_separated(RatPoly([0, 1, 1]), RatPoly([0, 1, 1]))
        assert len({a * b, b * a}) == 1

    def test_monic(self):
        constant, monic = BiPoly.from_terms({(1, 0): 3, (0, 1): 6}).monic()
        assert constant == 3
        assert monic == BiPoly.from_terms({(1, 0): 1, (0, 1): 2})

    def test_monic_needs_constant_lead(self):
        with pytest.raises(ValueError):
            BiPoly.from_terms({(1, 1): 1}).monic()

    def test_divmod_monic(self, split_conic):
        divisor = BiPoly.from_terms({(1, 0): 1, (0, 1): -1})
        quot, rem = split_conic.divmod_monic(divisor)
        assert rem.is_zero
        assert quot == BiPoly.from_terms({(1, 0): 1, (0, 1): 1, (0, 0): 1})

    def test_substitute(self, split_conic):
        # m = n = u lies on the first factor
        u = RatPoly.variable()
        assert split_conic.substitute(u, u).is_zero

    def test_primitive(self):
        content, prim = BiPoly.from_terms({(1, 0): "1/2", (0, 0): "3/2"}).primitive()
        assert content == Fraction(1, 2)
        assert prim == BiPoly.from_terms({(1, 0): 1, (0, 0): 3})

    def test_format(self):
        assert BiPoly.from_terms({(2, 0): 1, (0, 1): -3}).format() == "m^2 - 3*n"


# ============================================================================
# Interpolation and square roots
# ============================================================================

class TestInterpolate:

    def test_quadratic(self):
        assert interpolate([(0, 1), (1, 2), (2, 5), (3, 10)], 2) == RatPoly([1, 0, 1])

    def test_inconsistent_extra_point(self):
        with pytest.raises(InconsistentPoints):
            interpolate([(0, 1), (1, 2), (2, 5), (3, 11)], 2)

    def test_duplicate_abscissa(self):
        with pytest.raises(DuplicateAbscissa):
            interpolate([(0, 1), (0, 2)], 1)

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            interpolate([(0, 1)], 2)


class TestSquarefree:

    def test_decompose(self):
        f = RatPoly([1, 1]) ** 2 * RatPoly([2, 1]) * 3
        decomposition = squarefree_decompose(f)
        assert decomposition.content == 3
        assert decomposition.odd_part() == RatPoly([2, 1])
        assert decomposition.square_cofactor() == RatPoly([1, 1])
        assert decomposition.reconstruct() == f

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            squarefree_decompose(RatPoly())

    @pytest.mark.parametrize("root", [
        RatPoly([1, 1]),
        RatPoly([1, 2]),
        RatPoly(["1/2", 1]),
        RatPoly([5, 3, 18]),
    ])
    def test_perfect_square_root(self, root):
        assert perfect_square_root(root * root) == root

    def test_not_a_square(self):
        assert perfect_square_root(RatPoly([1, 0, 1])) is None
        assert perfect_square_root(RatPoly([0, 0, 0, 1])) is None
        assert perfect_square_root(RatPoly([0, 0, 2])) is None


# ============================================================================
# Discriminants
# ============================================================================

class TestDiscriminant:

    def test_quadratic(self):
        assert discriminant(RatPoly([1, 3, 2])) == 1

    def test_cubic_matches_closed_form(self):
        f = RatPoly([0, -1, 0, 1])
        assert discriminant(f) == 4
        assert discriminant_closed_form(list(f.coeffs)) == 4

    def test_bivariate_in_m(self, split_conic):
        assert discriminant(split_conic, "m") == RatPoly([1, 4, 4])

    @pytest.mark.parametrize("coeffs", [[1, 3, 2], [5, 0, -2, 1], [3, -1, 0, 2, 5]])
    def test_matches_sympy(self, coeffs):
        x = sympy.Symbol("x")
        expected = sympy.discriminant(sum(c * x**k for k, c in enumerate(coeffs)), x)
        assert discriminant(RatPoly(coeffs)) == int(expected)

    def test_degree_limits(self):
        with pytest.raises(DegreeUnsupported):
            discriminant(RatPoly([0, 1]))
        with pytest.raises(DegreeUnsupported):
            discriminant_closed_form([1, 0, 0, 0, 0, 1])


# ============================================================================
# Factor search and modular checks
# ============================================================================

class TestBifactorSearch:

    def test_finds_linear_factors(self, split_conic):
        result = bifactor_search(split_conic)
        assert result.reducible
        assert result.constant == 1
        assert set(result.factors) == {
            BiPoly.from_terms({(1, 0): 1, (0, 1): -1}),
            BiPoly.from_terms({(1, 0): 1, (0, 1): 1, (0, 0): 1}),
        }
        assert result.product() == split_conic

    def test_irreducible(self):
        f = BiPoly.from_separated(RatPoly([-2, 0, 1]), RatPoly([0, 0, 0, 1]))
        result = bifactor_search(f)
        assert not result.reducible
        assert result.complete

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            bifactor_search(BiPoly())


class TestModularObstruction:

    def test_no_solutions_mod_5(self):
        # m^2 = 5n + 2 has no solutions mod 5
        f = BiPoly.from_separated(RatPoly([0, 0, 1]), RatPoly([2, 5]))
        check = no_solutions_mod_p(f, 5)
        assert check.no_solutions
        assert check.witness is None

    def test_witness(self):
        f = BiPoly.from_separated(RatPoly([0, 0, 1]), RatPoly([0, 1]))
        check = no_solutions_mod_p(f, 3)
        assert not check.no_solutions
        assert check.witness == (0, 0)

    def test_modulus_range(self):
        with pytest.raises(ValueError):
            no_solutions_mod_p(BiPoly([1]), 101)

    def test_denominators_are_cleared(self):
        # (m^2 - 5n - 2) / 3
        f = BiPoly.from_terms({(2, 0): "1/3", (0, 1): "-5/3", (0, 0): "-2/3"})
        assert no_solutions_mod_p(f, 5).no_solutions

    def test_denominators_rejected_without_clearing(self):
        f = BiPoly.from_terms({(1, 0): "1/2", (0, 1): 1})
        with pytest.raises(NonIntegerCoefficients):
            no_solutions_mod_p(f, 3, clear_denominators=False)


# ============================================================================
# Randomized invariants
# ============================================================================

def _random_poly(rng, degree, bound=9):
    coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return RatPoly(coeffs + [Fraction(lead, rng.randint(1, 4))])


class TestRandomizedAlgebra:
    """Seeded random checks against independent computations."""

    def test_interpolate_round_trip(self):
        rng = random.Random(31)
        for _ in range(60):
            degree = rng.randint(0, 6)
            f = _random_poly(rng, degree)
            xs = rng.sample(range(-40, 40), degree + 4)
            assert interpolate([(x, f.evaluate(x)) for x in xs], degree) == f

    def test_perfect_square_root_of_square(self):
        rng = random.Random(5)
        for _ in range(60):
            g = _random_poly(rng, rng.randint(0, 4))
            root = perfect_square_root(g * g)
            assert root == (g if g.lead > 0 else g * -1)

    def test_closed_form_matches_resultant(self):
        rng = random.Random(1234)
        for _ in range(100):
            f = _random_poly(rng, rng.choice([2, 3]))
            assert discriminant(f) == discriminant_closed_form(list(f.coeffs))

    def test_quartic_matches_sympy(self):
        rng = random.Random(77)
        x = sympy.Symbol("x")
        for _ in range(20):
            coeffs = [rng.randint(-6, 6) for _ in range(4)] + [rng.choice([-3, -1, 1, 2])]
            expected = sympy.discriminant(sum(c * x**k for k, c in enumerate(coeffs)), x)
            assert discriminant(RatPoly(coeffs)) == int(expected)
