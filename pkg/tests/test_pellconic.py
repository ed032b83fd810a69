"""Tests for Pell equations, conics and the named families."""

from math import isqrt

import pytest
from sympy.solvers.diophantine.diophantine import diop_DN

from denumerant.errors import NotHyperbolic, SquareD, UnknownSelection
from denumerant.models.certificates import EquationKind, SearchStatus
from denumerant.partcount import PartSet, count_table
from denumerant.pellconic import (
    FAMILY_BUILDERS,
    ConicProblem,
    closed_form_pieces_p3,
    conic_from_pieces,
    family_from_theorem,
    pell_fundamental,
    pell_stream,
    pell_take,
    printed_12a12b_fails,
    solve_conic,
)
from denumerant.polyratio import RatPoly


# ============================================================================
# Pell equations
# ============================================================================

class TestPell:
    """Fundamental solutions and their powers."""

    @pytest.mark.parametrize("d,expected", [
        (2, (3, 2)),
        (3, (2, 1)),
        (7, (8, 3)),
        (61, (1766319049, 226153980)),
    ])
    def test_fundamental(self, d, expected):
        assert pell_fundamental(d) == expected

    def test_take(self):
        assert pell_take(2, 3) == [(3, 2), (17, 12), (99, 70)]

    def test_stream_solutions_are_valid(self):
        stream = pell_stream(13)
        for _ in range(5):
            u, v = next(stream)
            assert u * u - 13 * v * v == 1

    def test_square_d(self):
        with pytest.raises(SquareD):
            pell_fundamental(16)

    def test_small_d(self):
        with pytest.raises(ValueError):
            pell_fundamental(1)

    def test_fundamental_is_minimal_for_d_up_to_500(self):
        for d in range(2, 501):
            if isqrt(d) ** 2 == d:
                continue
            u, v = pell_fundamental(d)
            assert u * u - d * v * v == 1
            assert diop_DN(d, 1) == [(u, v)]
            # no smaller v, checked directly where that is cheap
            for w in range(1, min(v, 3000)):
                t = 1 + d * w * w
                assert isqrt(t) ** 2 != t

    def test_take_relation_for_d_up_to_200(self):
        for d in range(2, 201):
            if isqrt(d) ** 2 == d:
                continue
            solutions = pell_take(d, 20)
            assert all(u * u - d * v * v == 1 for u, v in solutions)
            assert all(a[1] < b[1] for a, b in zip(solutions, solutions[1:]))


# ============================================================================
# Conics
# ============================================================================

class TestSolveConic:
    """Smallest nonnegative solutions of p(m) = q(n)."""

    def test_pell_as_conic(self):
        # m^2 = 2n^2 + 1
        solved = solve_conic(ConicProblem(p=(1, 0, 0), q=(2, 0, 1)), count=3)
        assert solved.solutions == [(1, 0), (3, 2), (17, 12)]
        assert solved.d == 2
        assert solved.n_value == 16
        assert solved.status == SearchStatus.COMPLETE

    def test_six_nine_ten_twelve(self):
        solved = solve_conic(ConicProblem(p=(6, 9, 0), q=(10, 12, 0)), count=3)
        assert solved.solutions == [(0, 0), (2928, 2268), (11252256, 8715960)]

    def test_solutions_hold(self):
        problem = ConicProblem(p=(1, 0, 0), q=(1440, 988, 169))
        solved = solve_conic(problem, count=3)
        assert solved.fundamental == (721, 19)
        assert solved.solutions[0] == (13, 0)
        assert all(problem.holds(m, n) for m, n in solved.solutions)

    def test_automorphism_preserves_solutions(self):
        problem = ConicProblem(p=(1, 0, 0), q=(2, 0, 1))
        solved = solve_conic(problem, count=2)
        image = solved.apply_automorphism(*solved.solutions[1])
        assert image is not None and problem.holds(*image)

    def test_square_d_rejected(self):
        with pytest.raises(NotHyperbolic):
            solve_conic(ConicProblem(p=(1, 0, 0), q=(4, 0, 1)))

    def test_linear_side_rejected(self):
        with pytest.raises(NotHyperbolic):
            solve_conic(ConicProblem(p=(0, 1, 0), q=(2, 0, 1)))

    def test_str(self):
        assert str(ConicProblem(p=(1, 0, 0), q=(2, 0, 1))) == "m^2 = 2*n^2 + 1"


class TestConicFromPieces:
    def test_clears_denominators(self):
        problem = conic_from_pieces(RatPoly(["1/2", 0, 1]), RatPoly([0, "1/3", 1]))
        assert problem.p == (6, 0, 3)
        assert problem.q == (6, 2, 0)

    def test_requires_quadratics(self):
        with pytest.raises(NotHyperbolic):
            conic_from_pieces(RatPoly([0, 1]), RatPoly([0, 0, 1]))


# ============================================================================
# Families
# ============================================================================

class TestFamilies:
    """Registered families produce verified points."""

    def test_p3_pieces(self, p3):
        pieces = closed_form_pieces_p3()
        table = count_table(p3, 6 * 20 + 5)
        for residue, piece in enumerate(pieces):
            assert all(piece.evaluate_int(n) == table[6 * n + residue] for n in range(20))

    def test_sq_p4_i3(self):
        result = family_from_theorem("sq_P4_i3", take=4)
        assert result.equation_kind == EquationKind.SQUARE
        assert len(result.points) == 4
        assert all(step.ok for step in result.transcript)

    def test_sq_12a_pell_examples(self):
        result = family_from_theorem("sq_12a_pell", {"a": 6}, take=3)
        assert all(step.ok for step in result.transcript)
        # n = 40 gives y = 99 on P_{1,2,6}(12n)
        assert (12 * 40, 99) in result.points

    def test_unknown_family(self):
        with pytest.raises(UnknownSelection):
            family_from_theorem("no_such_family")

    def test_registry_keys(self):
        assert {"sq_P3_i4", "sq_P4_i5", "pell_12a12b"} <= set(FAMILY_BUILDERS)

    def test_printed_pell_formula_fails(self):
        assert printed_12a12b_fails(2, 4)

    def test_pell_12a12b_points_are_equal_values(self):
        result = family_from_theorem("pell_12a12b", {"a": 4, "b": 8}, take=3)
        assert result.right is not None
        left, right = PartSet.of(1, 2, 4), PartSet.of(1, 2, 8)
        assert (result.left, result.right) == (left, right)
        assert all(step.ok for step in result.transcript)
