"""Tests for square values and square pieces."""

import random

import pytest

from denumerant.errors import BudgetExceeded
from denumerant.partcount import PartSet
from denumerant.polyratio import RatPoly
from denumerant.quasipoly import try_piece
from denumerant.squarehunt import (
    SEVEN_PARTS,
    census_square_pieces,
    p5_obstructed_residues,
    seven_factorizations,
    square_pieces,
    square_times_linear,
    square_value_search,
    summarize_census,
    verify_seven_example,
)
from denumerant.suite import CENSUS_TOTAL, P5_OBSTRUCTED


# ============================================================================
# Square values
# ============================================================================

class TestSquareValueSearch:
    """y^2 = P_A(x) by direct search."""

    def test_p5(self, p5, cache):
        assert square_value_search(p5, 3_000, cache=cache) == [(1, 1), (2027, 77129)]

    def test_empty_range(self, p5):
        assert square_value_search(p5, 0) == []

    def test_budget(self, p5):
        with pytest.raises(BudgetExceeded):
            square_value_search(p5, 1_000, budget=999)

    def test_obstructed_residues(self, cache):
        assert set(P5_OBSTRUCTED) <= set(p5_obstructed_residues(cache=cache))


# ============================================================================
# Square pieces
# ============================================================================

class TestSquarePieces:

    def test_odd_degree_has_none(self, p4):
        assert square_pieces(p4) == []

    def test_records_are_squares(self):
        parts = PartSet.of(1, 5, 6, 8, 10)
        records = square_pieces(parts)
        assert records
        for record in records:
            piece = try_piece(parts, record.modulus, record.residue)
            assert piece == record.root * record.root

    def test_records_ignore_part_order(self):
        rng = random.Random(11)
        for _ in range(12):
            parts = rng.sample(range(1, 13), 3)
            shuffled = parts[:]
            rng.shuffle(shuffled)
            assert square_pieces(PartSet.of(*shuffled)) == square_pieces(PartSet.of(*parts))

    def test_census_ignores_enumeration_order(self):
        records = census_square_pieces(3, 8)
        assert records
        assert records == sorted(records, key=lambda r: (r.parts.parts, r.residue))
        assert records == census_square_pieces(3, 8, workers=2)

    def test_census_bounds(self):
        with pytest.raises(ValueError):
            census_square_pieces(6, 5)

    @pytest.mark.slow
    def test_census_total(self):
        summary = summarize_census(5, 15, census_square_pieces(5, 15))
        assert CENSUS_TOTAL in (summary.integral_count, summary.rational_count)


class TestSquareTimesLinear:

    @pytest.mark.parametrize("residue,factor", [(6, (3, 4)), (8, (5, 4))])
    def test_p4_even_classes(self, p4, residue, factor):
        # P_4(12n+6) = 3(n+1)^2(4n+3), P_4(12n+8) = 3(n+1)^2(4n+5)
        piece = try_piece(p4, 12, residue)
        shape = square_times_linear(piece)
        assert shape is not None
        c, g, linear = shape
        assert g == RatPoly([1, 1])
        assert linear.degree == 1
        assert linear * g * g * c == piece
        assert piece == RatPoly([1, 1]) ** 2 * RatPoly(list(factor)) * 3

    def test_square_is_not_this_shape(self):
        assert square_times_linear(RatPoly([1, 1]) ** 2) is None

    def test_constant_rejected(self):
        assert square_times_linear(RatPoly([4])) is None


# ============================================================================
# The seven-part example
# ============================================================================

class TestSevenParts:

    def test_factorizations(self):
        for residue, expected in seven_factorizations().items():
            assert try_piece(SEVEN_PARTS, 360, residue) == expected

    @pytest.mark.slow
    def test_square_values(self):
        report = verify_seven_example(count=3, check_bound=10_000)
        assert report.square_ns == [0, 494, 712842]
        assert report.residue_226_squares == []
