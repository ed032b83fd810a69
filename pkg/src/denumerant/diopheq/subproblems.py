"""Residue subproblems of P_A(x) = P_B(y).

Every solution lies in exactly one pair of residue classes x = M_A*m + i,
y = M_B*n + j, on which both sides are polynomials p(m) and q(n).
"""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from ..errors import BudgetExceeded
from ..partcount import PartSet
from ..polyratio import BiPoly, RatPoly
from ..quasipoly import CoarseClass, coarse_decomposition, try_piece
from ..services.sweep_service import SweepService

logger = logging.getLogger(__name__)


class ResidueSubproblem(BaseModel):
    """p(m) = P_A(M_A*m + i) against q(n) = P_B(M_B*n + j)."""
    left: PartSet = Field(..., description="A")
    right: PartSet = Field(..., description="B")
    left_modulus: int = Field(..., description="M_A")
    left_residue: int = Field(..., description="i")
    right_modulus: int = Field(..., description="M_B")
    right_residue: int = Field(..., description="j")
    p: RatPoly = Field(..., description="Left piece in m")
    q: RatPoly = Field(..., description="Right piece in n")

    @property
    def polynomial(self) -> BiPoly:
        """F(m, n) = p(m) - q(n)."""
        return BiPoly.from_separated(self.p, self.q)

    @property
    def label(self) -> str:
        return (
            f"P_{self.left}({self.left_modulus}m+{self.left_residue}) = "
            f"P_{self.right}({self.right_modulus}n+{self.right_residue})"
        )

    def point(self, m: int, n: int) -> Tuple[int, int]:
        return self.left_modulus * m + self.left_residue, self.right_modulus * n + self.right_residue

    def holds(self, m: int, n: int) -> bool:
        return self.p.evaluate(m) == self.q.evaluate(n)

    def bounded_solutions(self, m_max: int, n_max: int) -> List[Tuple[int, int]]:
        """All 0 <= m <= m_max, 0 <= n <= n_max with p(m) = q(n)."""
        if m_max < 0 or n_max < 0:
            return []
        left = _value_index(self.p, m_max)
        found = []
        for n in range(n_max + 1):
            for m in left.get(self.q.evaluate_int(n), ()):
                found.append((m, n))
        found.sort()
        return found


def _value_index(poly: RatPoly, limit: int) -> Dict[int, List[int]]:
    index: Dict[int, List[int]] = defaultdict(list)
    for m in range(limit + 1):
        index[poly.evaluate_int(m)].append(m)
    return index


def make_subproblem(
    left: PartSet, left_class: CoarseClass, right: PartSet, right_class: CoarseClass
) -> ResidueSubproblem:
    return ResidueSubproblem(
        left=left,
        right=right,
        left_modulus=left_class.modulus,
        left_residue=left_class.residue,
        right_modulus=right_class.modulus,
        right_residue=right_class.residue,
        p=left_class.piece,
        q=right_class.piece,
    )


def enumerate_subproblems(left: PartSet, right: PartSet) -> List[ResidueSubproblem]:
    """One subproblem per pair of certified classes, zero pieces excluded.

    Classes come from the coarsest certified cover of each side, so P_4
    contributes its three odd classes mod 6 and six even classes mod 12.
    """
    left_classes = [c for c in coarse_decomposition(left) if not c.piece.is_zero]
    right_classes = [c for c in coarse_decomposition(right) if not c.piece.is_zero]
    subproblems = [
        make_subproblem(left, lc, right, rc) for lc in left_classes for rc in right_classes
    ]
    logger.info(
        "%s vs %s: %d x %d = %d subproblems",
        left, right, len(left_classes), len(right_classes), len(subproblems),
    )
    return subproblems


def residue_subproblem(
    left: PartSet,
    left_modulus: int,
    left_residue: int,
    right: PartSet,
    right_modulus: int,
    right_residue: int,
) -> Optional[ResidueSubproblem]:
    """A single subproblem on explicit classes, or None when a side is not polynomial."""
    p = try_piece(left, left_modulus, left_residue)
    q = try_piece(right, right_modulus, right_residue)
    if p is None or q is None:
        return None
    return ResidueSubproblem(
        left=left, right=right,
        left_modulus=left_modulus, left_residue=left_residue,
        right_modulus=right_modulus, right_residue=right_residue,
        p=p, q=q,
    )


def twelve_a_subproblem(a: int, i: int, j: int) -> ResidueSubproblem:
    """P_{1,2,a}(2a*m + i) = P_{1,2,3,4}(12n + j)."""
    sub = residue_subproblem(PartSet.of(1, 2, a), 2 * a, i, PartSet.first(4), 12, j)
    assert sub is not None
    return sub


class SubproblemSolutions(BaseModel):
    subproblem: ResidueSubproblem
    solutions: List[Tuple[int, int]] = Field(default_factory=list, description="(m, n) pairs")
    points: List[Tuple[int, int]] = Field(default_factory=list, description="(x, y) pairs")


def _solve_one(job: Tuple[ResidueSubproblem, int, int]) -> SubproblemSolutions:
    sub, x_max, y_max = job
    m_max = (x_max - sub.left_residue) // sub.left_modulus
    n_max = (y_max - sub.right_residue) // sub.right_modulus
    solutions = sub.bounded_solutions(m_max, n_max)
    return SubproblemSolutions(
        subproblem=sub,
        solutions=solutions,
        points=[sub.point(m, n) for m, n in solutions],
    )


def solve_subproblems(
    left: PartSet,
    right: PartSet,
    x_max: int,
    y_max: int,
    workers: int = 1,
    subproblems: Optional[Sequence[ResidueSubproblem]] = None,
    budget: Optional[int] = None,
) -> List[SubproblemSolutions]:
    """Bounded search on every subproblem; the union of points covers the box."""
    if budget is not None and x_max + y_max > budget:
        raise BudgetExceeded(f"x_max + y_max = {x_max + y_max} exceeds {budget}")
    subs = list(subproblems) if subproblems is not None else enumerate_subproblems(left, right)
    jobs = [(sub, x_max, y_max) for sub in subs]
    return SweepService(workers=workers).map(_solve_one, jobs, label="subproblems")
