"""Tests for reducible subproblems."""

from fractions import Fraction

import pytest
import sympy

from denumerant.diopheq.reducibility import (
    candidate_pairs,
    check_known_splittings,
    factor_subproblem,
    top_form_can_split,
)
from denumerant.diopheq.subproblems import residue_subproblem
from denumerant.polyratio import BiPoly


class TestTopForm:

    def test_square_ratio(self):
        assert top_form_can_split(Fraction(1), Fraction(4), 2)
        assert not top_form_can_split(Fraction(1), Fraction(2), 2)

    def test_cube_ratio(self):
        assert top_form_can_split(Fraction(1), Fraction(8), 3)

    def test_linear_never_splits(self):
        assert not top_form_can_split(Fraction(1), Fraction(1), 1)

    def test_candidate_pairs_bounds(self):
        with pytest.raises(ValueError):
            candidate_pairs(3, 2)


class TestFactorSubproblem:

    def test_equal_pieces_split(self, p3):
        # 3m^2 + 3m - 3n^2 - 3n = 3(m - n)(m + n + 1)
        sub = residue_subproblem(p3, 6, 0, p3, 6, 0)
        assert sub is not None
        case = factor_subproblem(sub)
        assert set(case.factors) == {
            BiPoly.from_terms({(1, 0): 1, (0, 1): -1}),
            BiPoly.from_terms({(1, 0): 1, (0, 1): 1, (0, 0): 1}),
        }
        assert case.constant == 3
        assert case.obstructions == []

    def test_factor_count_matches_sympy(self, p3):
        sub = residue_subproblem(p3, 6, 0, p3, 6, 0)
        assert sub is not None
        m, n = sympy.symbols("m n")
        expr = sum(
            sympy.Rational(c.numerator, c.denominator) * m**i * n**j
            for (i, j), c in sub.polynomial.terms().items()
        )
        _, factors = sympy.factor_list(expr)
        assert len(factors) == len(factor_subproblem(sub).factors)

    @pytest.mark.slow
    def test_known_splittings(self):
        for check in check_known_splittings():
            assert check.matched, check.name
            assert check.obstructions_confirmed, check.name
