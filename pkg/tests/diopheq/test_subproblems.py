"""Tests for residue-class subproblems."""

import pytest

from denumerant.diopheq import search, subproblems
from denumerant.diopheq.subproblems import (
    enumerate_subproblems,
    residue_subproblem,
    solve_subproblems,
    twelve_a_subproblem,
)
from denumerant.errors import BudgetExceeded
from denumerant.partcount import PartSet
from denumerant.polyratio import RatPoly


class TestEnumerate:
    """One subproblem per pair of coarse classes."""

    def test_p3_p4_count(self, p3, p4):
        assert len(enumerate_subproblems(p3, p4)) == 54

    def test_p3_p5_count(self, p3, p5):
        assert len(enumerate_subproblems(p3, p5)) == 360

    def test_zero_pieces_skipped(self, p3):
        subs = enumerate_subproblems(PartSet.of(2, 4), p3)
        assert all(sub.left_residue % 2 == 0 for sub in subs)


class TestResidueSubproblem:

    def test_label(self, p3, p4):
        sub = residue_subproblem(p3, 6, 1, p4, 6, 3)
        assert sub is not None
        assert sub.label == "P_{1,2,3}(6m+1) = P_{1,2,3,4}(6n+3)"

    def test_non_polynomial_side(self, p3, p4):
        assert residue_subproblem(p3, 4, 1, p4, 12, 0) is None

    def test_bounded_solutions(self, p3, p4):
        sub = residue_subproblem(p3, 6, 1, p4, 6, 3)
        assert sub is not None
        assert sub.bounded_solutions(10, 10) == [(8, 4)]
        assert sub.point(8, 4) == (49, 27)
        assert sub.holds(8, 4)

    def test_negative_bounds(self, p3, p4):
        sub = residue_subproblem(p3, 6, 1, p4, 6, 3)
        assert sub is not None
        assert sub.bounded_solutions(-1, 5) == []

    def test_twelve_a_pieces(self):
        sub = twelve_a_subproblem(9, 0, 3)
        assert sub.p == RatPoly([1, 6, 9])
        assert sub.q == RatPoly([3, 15, 24, 12])


class TestSolveSubproblems:
    """The union of subproblem points is the full box."""

    def test_union_matches_brute_force(self, p3, p4):
        found = {
            point
            for solved in solve_subproblems(p3, p4, 300, 300)
            for point in solved.points
        }
        expected = {
            cert.point for cert in search.brute_force_search(p3, p4, 300, 300, positive=False)
        }
        assert found == expected

    def test_budget(self, p3, p4):
        with pytest.raises(BudgetExceeded):
            solve_subproblems(p3, p4, 100, 100, budget=150)

    def test_explicit_subproblems(self, p3, p4):
        sub = residue_subproblem(p3, 6, 1, p4, 6, 3)
        solved = subproblems.solve_subproblems(p3, p4, 40_000, 3_000, subproblems=[sub])
        assert solved[0].points == [(49, 27), (39199, 2637)]
