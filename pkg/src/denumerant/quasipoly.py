"""Quasi-polynomial structure of P_A: the residue pieces P_A(M*n + r)."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional

from pydantic import BaseModel, Field

from .errors import InconsistentPoints, NotPolynomial
from .partcount import PartSet
from .polyratio import RatPoly, interpolate
from .services.oracle_service import ValueOracle

logger = logging.getLogger(__name__)

# Verification samples per piece, as a multiple of |A|, beyond the |A| used to build it.
VERIFY_FACTOR = 3

# Part sets whose default oracle (tables and pieces) stays resident.
ORACLE_CACHE_SIZE = 64


class QuasiPoly(BaseModel):
    """P_A(modulus*n + i) = pieces[i](n)."""
    parts: PartSet = Field(..., description="The part set A")
    modulus: int = Field(..., description="Period of the decomposition")
    pieces: List[RatPoly] = Field(..., description="Residue pieces, index = residue")
    empty_residues: List[int] = Field(default_factory=list, description="Residues with no partitions")

    def piece(self, residue: int) -> RatPoly:
        return self.pieces[residue % self.modulus]

    def evaluate(self, n: int) -> int:
        return self.piece(n % self.modulus).evaluate_int(n // self.modulus)

    def refined_piece(self, modulus: int, residue: int) -> RatPoly:
        """P_A(modulus*n + residue) for a multiple of the stored modulus."""
        if modulus % self.modulus:
            raise ValueError(f"{modulus} is not a multiple of {self.modulus}")
        base = self.piece(residue % self.modulus)
        return base.compose_linear(modulus // self.modulus, residue // self.modulus)

    def at_modulus(self, modulus: int) -> QuasiPoly:
        return QuasiPoly(
            parts=self.parts,
            modulus=modulus,
            pieces=[self.refined_piece(modulus, r) for r in range(modulus)],
            empty_residues=[r for r in range(modulus) if r % self.parts.gcd],
        )


class CoarseClass(BaseModel):
    modulus: int = Field(..., description="Modulus d dividing L_A")
    residue: int = Field(..., description="Residue r mod d")
    piece: RatPoly = Field(..., description="P_A(d*n + r)")


@lru_cache(maxsize=ORACLE_CACHE_SIZE)
def default_oracle(parts: PartSet) -> ValueOracle:
    """Oracle holding the tables and pieces of one part set."""
    return ValueOracle()


def leading_coefficient_law(parts: PartSet, modulus: Optional[int] = None) -> Fraction:
    """Shared leading coefficient g * M^(k-1) / ((k-1)! * prod A) of nonzero pieces."""
    m = modulus or parts.lcm
    k = parts.size
    return Fraction(parts.gcd * m ** (k - 1), math.factorial(k - 1) * parts.product)


def sample_start(parts: PartSet, modulus: int, residue: int) -> int:
    """First n with modulus*n + residue >= max(A)."""
    return max(0, -(-(parts.max_part - residue) // modulus))


def _sample_piece(
    parts: PartSet, modulus: int, residue: int, oracle: ValueOracle
) -> Optional[RatPoly]:
    k = parts.size
    start = sample_start(parts, modulus, residue)
    ns = list(range(start, start + (1 + VERIFY_FACTOR) * k))
    values = oracle.sample(parts, [modulus * n + residue for n in ns])
    if not any(values):
        return RatPoly()
    try:
        return interpolate(list(zip(ns, values)), k - 1)
    except InconsistentPoints:
        return None


def piece_at(parts: PartSet, residue: int, oracle: Optional[ValueOracle] = None) -> RatPoly:
    """The certified piece P_A(L_A*n + residue)."""
    modulus = parts.lcm
    if not 0 <= residue < modulus:
        raise ValueError(f"Residue {residue} outside 0..{modulus - 1}")
    oracle = oracle or default_oracle(parts)
    key = (parts, residue)
    cached = oracle.pieces.get(key)
    if cached is not None:
        return cached
    piece = _sample_piece(parts, modulus, residue, oracle)
    if piece is None:
        raise NotPolynomial(f"P_{parts}({modulus}n+{residue}) is not a polynomial")
    assert piece.is_zero == (residue % parts.gcd != 0)
    oracle.pieces[key] = piece
    return piece


@lru_cache(maxsize=256)
def decompose(parts: PartSet) -> QuasiPoly:
    modulus = parts.lcm
    logger.debug("Decomposing %s over %d residues", parts, modulus)
    return QuasiPoly(
        parts=parts,
        modulus=modulus,
        pieces=[piece_at(parts, r) for r in range(modulus)],
        empty_residues=[r for r in range(modulus) if r % parts.gcd],
    )


def try_piece(
    parts: PartSet, modulus: int, residue: int, oracle: Optional[ValueOracle] = None
) -> Optional[RatPoly]:
    """P_A(modulus*n + residue) as a polynomial, or None when it is not one.

    For moduli that are not multiples of L_A the sampled candidate is glued
    against the L_A-pieces on every class mod lcm(modulus, L_A), which makes
    the answer exact.
    """
    if not 0 <= residue < modulus:
        raise ValueError(f"Residue {residue} outside 0..{modulus - 1}")
    oracle = oracle or default_oracle(parts)
    base = parts.lcm
    if modulus % base == 0:
        return piece_at(parts, residue % base, oracle).compose_linear(modulus // base, residue // base)

    candidate = _sample_piece(parts, modulus, residue, oracle)
    if candidate is None:
        return None
    joint = math.lcm(modulus, base)
    step = joint // modulus
    for s in range(step):
        x = modulus * s + residue
        lhs = candidate.compose_linear(step, s)
        rhs = piece_at(parts, x % base, oracle).compose_linear(joint // base, x // base)
        if lhs != rhs:
            logger.debug("Gluing failed for %s at %d mod %d", parts, residue, modulus)
            return None
    return candidate


def coarse_decomposition(parts: PartSet) -> List[CoarseClass]:
    """Greedy cover of the residues mod L_A by the coarsest polynomial classes."""
    base = parts.lcm
    covered = [False] * base
    classes: List[CoarseClass] = []
    for d in (d for d in range(1, base + 1) if base % d == 0):
        for r in range(d):
            members = range(r, base, d)
            if any(covered[x] for x in members):
                continue
            piece = try_piece(parts, d, r)
            if piece is None:
                continue
            classes.append(CoarseClass(modulus=d, residue=r, piece=piece))
            for x in members:
                covered[x] = True
        if all(covered):
            break
    return classes


# ---------------------------------------------------------------------------
# Three-part sets {1, 2, a}
# ---------------------------------------------------------------------------

def closed_form_12a(a: int) -> QuasiPoly:
    """Pieces of P_{1,2,a} with modulus 2a.

    Even a = 2c, i < a:  2c n^2 + (c + 2*(i//2) + 2) n + i//2 + 1
    Even a = 2c, i >= a: same quadratic and linear terms, constant 2*(i//2) + 2 - c
    Odd a = 2c+1, i < a:  a n^2 + (c + i + 2) n + i//2 + 1
    Odd a = 2c+1, i >= a: same quadratic and linear terms, constant i + 1 - c
    """
    return _closed_form_12a(a, printed=False)


def printed_closed_form_12a(a: int) -> QuasiPoly:
    """Variant whose upper-branch constant subtracts a instead of a//2.

    Kept so the suite can report where it disagrees with the counts.
    """
    return _closed_form_12a(a, printed=True)


def _closed_form_12a(a: int, printed: bool) -> QuasiPoly:
    if a < 3:
        raise ValueError(f"a must be at least 3, got {a}")
    c = a // 2
    shift = a if printed else c
    pieces = []
    for i in range(2 * a):
        if a % 2 == 0:
            linear = c + 2 * (i // 2) + 2
            const = i // 2 + 1 if i < a else 2 * (i // 2) + 2 - shift
            pieces.append(RatPoly([const, linear, 2 * c]))
        else:
            const = i // 2 + 1 if i < a else i + 1 - shift
            pieces.append(RatPoly([const, c + i + 2, a]))
    return QuasiPoly(parts=PartSet.of(1, 2, a), modulus=2 * a, pieces=pieces)


def corollary_scan(a: int, limit: int) -> List[int]:
    """All 1 <= n <= limit with P_{1,2,a}(n) == P_{1,2,a}(n+1)."""
    parts = PartSet.of(1, 2, a)
    table = default_oracle(parts).table(parts, limit + 1)
    return [n for n in range(1, limit + 1) if table[n] == table[n + 1]]
