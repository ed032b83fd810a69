"""Tests for quasi-polynomial pieces of P_A."""

import random

import pytest

from denumerant.partcount import PartSet, count_table
from denumerant.polyratio import RatPoly
from denumerant.quasipoly import (
    closed_form_12a,
    coarse_decomposition,
    corollary_scan,
    decompose,
    default_oracle,
    leading_coefficient_law,
    piece_at,
    printed_closed_form_12a,
    try_piece,
)
from denumerant.services.oracle_service import ValueOracle


class TestDecompose:
    """Residue pieces reproduce the counts."""

    def test_p3_pieces(self, p3):
        quasi = decompose(p3)
        assert quasi.modulus == 6
        assert quasi.piece(0) == RatPoly([1, 3, 3])
        assert quasi.piece(1) == RatPoly([1, 4, 3])

    @pytest.mark.parametrize("parts", [(1, 2, 3), (1, 2, 3, 4), (2, 3, 5), (1, 4, 6)])
    def test_evaluate_matches_table(self, parts):
        part_set = PartSet.of(*parts)
        quasi = decompose(part_set)
        table = count_table(part_set, 400)
        assert all(quasi.evaluate(n) == table[n] for n in range(401))

    def test_gcd_residues_are_zero(self):
        quasi = decompose(PartSet.of(2, 4))
        assert quasi.empty_residues == [1, 3]
        assert quasi.piece(1).is_zero

    def test_refined_piece(self, p3):
        quasi = decompose(p3)
        refined = quasi.refined_piece(12, 7)
        table = count_table(p3, 12 * 20 + 7)
        assert all(refined.evaluate_int(n) == table[12 * n + 7] for n in range(21))

    def test_refined_piece_needs_multiple(self, p3):
        with pytest.raises(ValueError):
            decompose(p3).refined_piece(9, 1)

    def test_piece_at_range(self, p3):
        with pytest.raises(ValueError):
            piece_at(p3, 6)

    def test_leading_coefficient_law(self, p4):
        lead = leading_coefficient_law(p4)
        assert all(piece.lead == lead for piece in decompose(p4).pieces)

    def test_leading_coefficient_law_random_sets(self):
        rng = random.Random(2024)
        for _ in range(15):
            parts = PartSet.of(*rng.sample(range(1, 7), rng.randint(2, 4)))
            lead = leading_coefficient_law(parts)
            pieces = decompose(parts).pieces
            assert all(piece.lead == lead for piece in pieces if not piece.is_zero)
            assert sum(not piece.is_zero for piece in pieces) == parts.lcm // parts.gcd


class TestPieceCache:
    """Certified pieces live on the oracle that built them."""

    def test_pieces_stay_on_the_given_oracle(self, p3):
        oracle = ValueOracle()
        piece = piece_at(p3, 1, oracle)
        assert oracle.pieces == {(p3, 1): piece}
        assert ValueOracle().pieces == {}

    def test_oracle_reuses_its_piece(self, p3):
        oracle = ValueOracle()
        assert piece_at(p3, 2, oracle) is piece_at(p3, 2, oracle)

    def test_quasi_route_fills_only_its_own_cache(self, p4):
        first, second = ValueOracle(dp_budget=10), ValueOracle(dp_budget=10)
        assert first.value(p4, 1000) == count_table(p4, 1000)[1000]
        assert (p4, 1000 % 12) in first.pieces
        assert second.pieces == {}

    def test_default_oracles_are_bounded(self):
        assert default_oracle.cache_info().maxsize is not None
        assert default_oracle(PartSet.of(1, 2)) is default_oracle(PartSet.of(1, 2))


class TestTryPiece:
    """Pieces on moduli other than L_A."""

    def test_twelve_a_piece(self):
        assert try_piece(PartSet.of(1, 2, 6), 12, 0) == RatPoly([1, 5, 6])

    def test_coarser_modulus(self):
        # P_{1,2}(2n + 1) = n + 1
        assert try_piece(PartSet.of(1, 2), 2, 1) == RatPoly([1, 1])

    def test_non_polynomial_class(self):
        assert try_piece(PartSet.of(1, 2), 1, 0) is None

    def test_p4_odd_class_mod_6(self, p4):
        # P_4(6n + 3) = 3(n+1)^2(n+2)/2
        expected = RatPoly([1, 1]) ** 2 * RatPoly([2, 1]) * 3 / 2
        assert try_piece(p4, 6, 3) == expected


class TestCoarseDecomposition:
    """The greedy cover is a partition of the residues mod L_A."""

    @pytest.mark.parametrize("parts", [(1, 2), (1, 2, 3), (1, 2, 3, 4)])
    def test_cover_is_exact(self, parts):
        part_set = PartSet.of(*parts)
        base = part_set.lcm
        hits = [0] * base
        for cls in coarse_decomposition(part_set):
            for x in range(cls.residue, base, cls.modulus):
                hits[x] += 1
        assert hits == [1] * base

    def test_p4_classes(self, p4):
        classes = coarse_decomposition(p4)
        assert sorted((c.modulus, c.residue) for c in classes) == (
            [(6, 1), (6, 3), (6, 5)] + [(12, r) for r in range(0, 12, 2)]
        )


class TestThreePartClosedForm:
    """Pieces of P_{1,2,a} mod 2a."""

    @pytest.mark.parametrize("a", [3, 4, 5, 6, 9, 10])
    def test_matches_decomposition(self, a):
        parts = PartSet.of(1, 2, a)
        closed = closed_form_12a(a)
        table = count_table(parts, 2 * a * 30)
        assert all(closed.evaluate(n) == table[n] for n in range(2 * a * 30))

    def test_printed_constant_differs(self):
        assert closed_form_12a(5).piece(9) == RatPoly([8, 13, 5])
        assert printed_closed_form_12a(5).piece(9) == RatPoly([5, 13, 5])

    def test_small_a_rejected(self):
        with pytest.raises(ValueError):
            closed_form_12a(2)

    def test_corollary_scan_odd(self):
        assert corollary_scan(5, 30) == [2]

    def test_corollary_scan_even(self):
        assert corollary_scan(4, 10) == [2, 4, 6, 8, 10]

    def test_corollary_scan_a3_empty(self):
        assert corollary_scan(3, 100) == []
