"""Square values of P_A: searches, square residue pieces and their census."""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from math import isqrt
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .errors import BudgetExceeded, VerificationFailed
from .models.certificates import EquationKind, SearchStatus, VerificationStep
from .partcount import PartSet, TableCache
from .pellconic import ConicProblem, solve_conic
from .polyratio import BigInt, RatPoly, Rational, perfect_square_root, rational_sqrt, squarefree_decompose
from .quasipoly import leading_coefficient_law, piece_at, sample_start, try_piece
from .services.oracle_service import ValueOracle
from .services.sweep_service import SweepService

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BUDGET = 50_000_000
DEFAULT_CHECK_BOUND = 10_000
# DP spot checks per census record.
SPOT_CHECKS = 10
# Sample values that must be perfect squares before a piece is interpolated.
VALUE_PREFILTER = 3


def _square_root(value: int) -> Optional[int]:
    if value < 0:
        return None
    root = isqrt(value)
    return root if root * root == value else None


def square_value_search(
    parts: PartSet,
    x_max: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
    cache: Optional[TableCache] = None,
) -> List[Tuple[int, int]]:
    """Every (x, y), 1 <= x <= x_max, y >= 0, with y^2 = P_A(x)."""
    if x_max > budget:
        raise BudgetExceeded(f"x_max = {x_max} exceeds the budget {budget}")
    if x_max < 1:
        return []
    table = (cache or TableCache()).table(parts, x_max)
    found = []
    for x in range(1, x_max + 1):
        y = _square_root(table[x])
        if y is not None:
            found.append((x, y))
    logger.info("y^2 = P_%s(x), x <= %d: %d solutions", parts, x_max, len(found))
    return found


# ---------------------------------------------------------------------------
# Census of square pieces
# ---------------------------------------------------------------------------

class SquarePieceRecord(BaseModel):
    parts: PartSet
    modulus: int = Field(..., description="L_A")
    residue: int = Field(..., description="i in P_A(L_A n + i)")
    root: RatPoly = Field(..., description="g with g^2 = P_A(L_A n + i)")
    integral: bool = Field(..., description="g has integer coefficients")


class CensusRow(BaseModel):
    parts: PartSet
    modulus: int
    residues: List[int] = Field(default_factory=list)


class CensusSummary(BaseModel):
    k: int
    max_part: int
    integral_count: int = Field(..., description="Pairs (A, i) with a root in Z[n]")
    rational_count: int = Field(..., description="Pairs (A, i) with a root in Q[n]")
    rows: List[CensusRow] = Field(default_factory=list, description="Integral records grouped by set")
    records: List[SquarePieceRecord] = Field(default_factory=list)


def _spot_check(parts: PartSet, modulus: int, residue: int, root: RatPoly, cache: TableCache) -> None:
    table = cache.table(parts, modulus * (SPOT_CHECKS - 1) + residue)
    for n in range(SPOT_CHECKS):
        if root.evaluate(n) ** 2 != table[modulus * n + residue]:
            raise VerificationFailed(
                f"P_{parts}({modulus}n+{residue}) != ({root.format()})^2 at n={n}"
            )


def square_pieces(parts: PartSet, cache: Optional[TableCache] = None) -> List[SquarePieceRecord]:
    """Residues i with P_A(L_A n + i) the square of a polynomial."""
    degree = parts.size - 1
    if degree % 2 or rational_sqrt(leading_coefficient_law(parts)) is None:
        return []
    cache = cache or TableCache()
    oracle = ValueOracle(cache=cache)
    modulus = parts.lcm
    table = cache.table(parts, modulus * (max(VALUE_PREFILTER, SPOT_CHECKS) + 1) + parts.max_part)
    records = []
    for residue in range(0, modulus, parts.gcd):
        start = sample_start(parts, modulus, residue)
        if any(
            _square_root(table[modulus * n + residue]) is None
            for n in range(start, start + VALUE_PREFILTER)
        ):
            continue
        piece = piece_at(parts, residue, oracle)
        root = perfect_square_root(piece)
        if root is None:
            continue
        _spot_check(parts, modulus, residue, root, cache)
        records.append(SquarePieceRecord(
            parts=parts, modulus=modulus, residue=residue, root=root,
            integral=root.is_integral(),
        ))
    return records


def _census_job(parts: PartSet) -> List[SquarePieceRecord]:
    return square_pieces(parts)


def census_square_pieces(k: int, max_part: int, workers: int = 1) -> List[SquarePieceRecord]:
    """Square pieces over every k-subset of {1..max_part}, ordered by A then i."""
    if k < 2 or max_part < k:
        raise ValueError(f"Need 2 <= k <= max_part, got k={k}, max_part={max_part}")
    subsets = [PartSet.of(*c) for c in itertools.combinations(range(1, max_part + 1), k)]
    results = SweepService(workers=workers).map(_census_job, subsets, label="census")
    records = [r for batch in results for r in batch]
    records.sort(key=lambda r: (r.parts.parts, r.residue))
    return records


def summarize_census(k: int, max_part: int, records: List[SquarePieceRecord]) -> CensusSummary:
    grouped: Dict[PartSet, List[int]] = defaultdict(list)
    for record in records:
        if record.integral:
            grouped[record.parts].append(record.residue)
    rows = [
        CensusRow(parts=parts, modulus=parts.lcm, residues=residues)
        for parts, residues in sorted(grouped.items(), key=lambda item: item[0].parts)
    ]
    return CensusSummary(
        k=k,
        max_part=max_part,
        integral_count=sum(1 for r in records if r.integral),
        rational_count=len(records),
        rows=rows,
        records=records,
    )


# ---------------------------------------------------------------------------
# Square times linear
# ---------------------------------------------------------------------------

class SquareTimesLinearRecord(BaseModel):
    """P_A(L_A n + i) = c * g(n)^2 * (alpha n + beta)."""
    parts: PartSet
    modulus: int
    residue: int
    constant: Rational = Field(..., description="c")
    square_root: RatPoly = Field(..., description="g, monic")
    linear: RatPoly = Field(..., description="alpha n + beta, monic")
    square_values: List[int] = Field(default_factory=list, description="n <= check_bound giving squares")
    check_bound: int
    status: SearchStatus = SearchStatus.BOUNDED


def square_times_linear(piece: RatPoly) -> Optional[Tuple[Rational, RatPoly, RatPoly]]:
    """(c, g, l) with piece = c g^2 l and l linear, else None."""
    if piece.is_zero or piece.degree < 1:
        return None
    decomposition = squarefree_decompose(piece)
    odd = decomposition.odd_part()
    if odd.degree != 1:
        return None
    return decomposition.content, decomposition.square_cofactor(), odd


def square_times_linear_pieces(
    parts: PartSet, check_bound: int = DEFAULT_CHECK_BOUND, modulus: Optional[int] = None
) -> List[SquareTimesLinearRecord]:
    modulus = modulus or parts.lcm
    records = []
    for residue in range(0, modulus, parts.gcd):
        piece = try_piece(parts, modulus, residue)
        if piece is None:
            continue
        shape = square_times_linear(piece)
        if shape is None:
            continue
        c, g, linear = shape
        squares = [
            n for n in range(check_bound + 1)
            if _square_root(piece.evaluate_int(n)) is not None
        ]
        if squares:
            logger.info("P_%s(%dn+%d) is square at %d values", parts, modulus, residue, len(squares))
        records.append(SquareTimesLinearRecord(
            parts=parts, modulus=modulus, residue=residue, constant=c, square_root=g,
            linear=linear, square_values=squares, check_bound=check_bound,
        ))
    return records


def _linear_job(job: Tuple[PartSet, int]) -> List[SquareTimesLinearRecord]:
    parts, check_bound = job
    if (parts.size - 1) % 2 == 0:
        return []
    return square_times_linear_pieces(parts, check_bound)


def census_square_times_linear(
    k: int, max_part: int, workers: int = 1, check_bound: int = DEFAULT_CHECK_BOUND
) -> List[SquareTimesLinearRecord]:
    """Pieces of shape c*g^2*(alpha n + beta) over every k-subset of {1..max_part}.

    Only odd-degree pieces (k even) can have this shape. Square values are
    searched up to ``check_bound``; the result is bounded, never a proof.
    """
    if k < 2 or max_part < k:
        raise ValueError(f"Need 2 <= k <= max_part, got k={k}, max_part={max_part}")
    jobs = [
        (PartSet.of(*c), check_bound)
        for c in itertools.combinations(range(1, max_part + 1), k)
    ]
    results = SweepService(workers=workers).map(_linear_job, jobs, label="square-times-linear")
    records = [r for batch in results for r in batch]
    records.sort(key=lambda r: (r.parts.parts, r.residue))
    return records


# ---------------------------------------------------------------------------
# A seven-part example
# ---------------------------------------------------------------------------

SEVEN_PARTS = PartSet.of(1, 2, 4, 5, 8, 9, 10)


class SevenExampleReport(BaseModel):
    factorizations_hold: bool
    conic: ConicProblem
    square_ns: List[BigInt] = Field(default_factory=list, description="Smallest n with (36n+13)(40n+13) square")
    transcript: List[VerificationStep] = Field(default_factory=list)
    residue_226_squares: List[int] = Field(default_factory=list)
    residue_226_bound: int


def _lin(beta: int, alpha: int) -> RatPoly:
    return RatPoly([beta, alpha])


def seven_factorizations() -> Dict[int, RatPoly]:
    """Expected P_A(360n + r) for r = 95 and 226."""
    return {
        95: RatPoly.product([_lin(1, 3) ** 2, _lin(5, 18) ** 2, _lin(13, 36), _lin(13, 40)]) * 25,
        226: RatPoly.product([_lin(2, 3) ** 2, _lin(13, 18) ** 2, _lin(23, 36), _lin(27, 40)]) * 25,
    }


def verify_seven_example(
    count: int = 3, check_bound: int = 100_000, oracle: Optional[ValueOracle] = None
) -> SevenExampleReport:
    """Both factorisations, the first n making 95-pieces square, and the 226 factor."""
    oracle = oracle or ValueOracle()
    for residue, expected in seven_factorizations().items():
        piece = try_piece(SEVEN_PARTS, 360, residue)
        if piece != expected:
            raise VerificationFailed(f"P_A(360n+{residue}) = {piece} differs from the factorisation")

    # (36n+13)(40n+13) = 1440n^2 + 988n + 169 = y^2
    conic = ConicProblem(p=(1, 0, 0), q=(1440, 988, 169))
    solved = solve_conic(conic, count)
    report = SevenExampleReport(
        factorizations_hold=True, conic=conic, residue_226_bound=check_bound,
    )
    for root, n in solved.solutions:
        y = 5 * (3 * n + 1) * (18 * n + 5) * root
        step = oracle.check(EquationKind.SQUARE, SEVEN_PARTS, None, 360 * n + 95, y, n)
        if not step.ok:
            raise VerificationFailed(f"y^2 = P_A(360n+95) fails at n={n}")
        report.square_ns.append(n)
        report.transcript.append(step)

    tail = _lin(23, 36) * _lin(27, 40)
    report.residue_226_squares = [
        n for n in range(check_bound + 1) if _square_root(tail.evaluate_int(n)) is not None
    ]
    return report


# ---------------------------------------------------------------------------
# 5-adic obstructions for P_{1,2,3,4,5}
# ---------------------------------------------------------------------------

P5 = PartSet.first(5)
_SQUARES_MOD_25 = {(y * y) % 25 for y in range(25)}


def p5_obstructed_residues(samples: int = 625, cache: Optional[TableCache] = None) -> List[int]:
    """Residues i mod 60 where no sampled P_5(60n + i) is a square mod 25."""
    table = (cache or TableCache()).table(P5, 60 * samples + 59)
    obstructed = []
    for residue in range(60):
        values = {table[60 * n + residue] % 25 for n in range(samples)}
        if not values & _SQUARES_MOD_25:
            obstructed.append(residue)
    return obstructed
