"""Reducible subproblems P_A(L_A m + i) - P_B(L_B n + j).

A reducible F(m, n) splits the equal-value problem into smaller ones,
often with a factor that has no solutions modulo a small prime.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field
from sympy import integer_nthroot, primefactors

from ..errors import DegreeUnsupported
from ..partcount import PartSet
from ..polyratio import BiPoly, ModularCheck, Rational, bifactor_search, no_solutions_mod_p
from ..polyratio.factor import DEFAULT_PROBES
from ..quasipoly import decompose, leading_coefficient_law
from ..services.sweep_service import SweepService
from .subproblems import ResidueSubproblem, residue_subproblem

logger = logging.getLogger(__name__)

OBSTRUCTION_PRIMES = (2, 3, 5, 7)


class ReducibleCase(BaseModel):
    subproblem: ResidueSubproblem
    constant: Rational = Field(..., description="F = constant * product of factors")
    factors: List[BiPoly] = Field(default_factory=list, description="Factors monic in m")
    obstructions: List[ModularCheck] = Field(
        default_factory=list, description="Factors with no zero modulo a small prime"
    )
    complete: bool = Field(True, description="The factor search covered every degree level")


def _rational_root(value: Fraction, k: int) -> Optional[Fraction]:
    if value < 0:
        return None
    num = _int_root(value.numerator, k)
    den = _int_root(value.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _int_root(n: int, k: int) -> Optional[int]:
    root, exact = integer_nthroot(n, k)
    return int(root) if exact else None


def top_form_can_split(left_lead: Fraction, right_lead: Fraction, degree: int) -> bool:
    """Whether a m^d - b n^d factors over Q, a necessary condition for F to."""
    if degree < 2:
        return False
    ratio = right_lead / left_lead
    return any(_rational_root(ratio, p) is not None for p in primefactors(degree))


def _obstructions(factors: Sequence[BiPoly]) -> List[ModularCheck]:
    found = []
    for factor in factors:
        for p in OBSTRUCTION_PRIMES:
            check = no_solutions_mod_p(factor, p)
            if check.no_solutions:
                found.append(check)
                break
    return found


def factor_subproblem(sub: ResidueSubproblem, probes: int = DEFAULT_PROBES) -> ReducibleCase:
    factorization = bifactor_search(sub.polynomial, probes)
    factors = factorization.factors
    return ReducibleCase(
        subproblem=sub,
        constant=factorization.constant,
        factors=factors,
        obstructions=_obstructions(factors) if len(factors) > 1 else [],
        complete=factorization.complete,
    )


def _sweep_pair(job: Tuple[PartSet, PartSet, int]) -> List[ReducibleCase]:
    left, right, probes = job
    left_q, right_q = decompose(left), decompose(right)
    hits = []
    for i, p in enumerate(left_q.pieces):
        if p.is_zero:
            continue
        for j, q in enumerate(right_q.pieces):
            if q.is_zero:
                continue
            sub = ResidueSubproblem(
                left=left, right=right,
                left_modulus=left_q.modulus, left_residue=i,
                right_modulus=right_q.modulus, right_residue=j,
                p=p, q=q,
            )
            case = factor_subproblem(sub, probes)
            if len(case.factors) > 1:
                logger.debug("%s splits into %d factors", sub.label, len(case.factors))
                hits.append(case)
    return hits


def candidate_pairs(size: int, max_part: int) -> List[Tuple[PartSet, PartSet]]:
    """Pairs A < B of size-element sets containing 1 whose top forms can split."""
    if size < 2 or max_part < size:
        raise ValueError(f"Need 2 <= size <= max_part, got size={size}, max_part={max_part}")
    sets = [PartSet.of(1, *rest) for rest in itertools.combinations(range(2, max_part + 1), size - 1)]
    leads = {s: leading_coefficient_law(s) for s in sets}
    return [
        (a, b) for a, b in itertools.combinations(sets, 2)
        if top_form_can_split(leads[a], leads[b], size - 1)
    ]


def reducibility_sweep(
    size: int = 5,
    max_part: int = 10,
    limit: Optional[int] = None,
    workers: int = 1,
    probes: int = DEFAULT_PROBES,
) -> List[ReducibleCase]:
    """Every reducible residue subproblem among pairs of sets containing 1.

    Runtime grows quickly with ``max_part``; ``limit`` caps the number of
    set pairs examined.
    """
    pairs = candidate_pairs(size, max_part)
    logger.info("%d candidate set pairs of size %d up to %d", len(pairs), size, max_part)
    if limit is not None:
        pairs = pairs[:limit]
    jobs = [(a, b, probes) for a, b in pairs]
    results = SweepService(workers=workers).map(_sweep_pair, jobs, label="reducibility")
    return [case for hits in results for case in hits]


# ---------------------------------------------------------------------------
# Known splittings
# ---------------------------------------------------------------------------

class KnownSplitting(BaseModel):
    name: str
    subproblem: ResidueSubproblem
    expected: List[BiPoly] = Field(..., description="Expected factors up to constants")
    obstructed: List[int] = Field(default_factory=list, description="Indices with no zero mod 5")


class SplittingCheck(BaseModel):
    name: str
    case: ReducibleCase
    matched: bool = Field(..., description="Every expected factor appears up to a constant")
    obstructions_confirmed: bool


def _bi(terms: Dict[Tuple[int, int], int]) -> BiPoly:
    return BiPoly.from_terms(terms)


def known_splittings() -> List[KnownSplitting]:
    f = residue_subproblem(
        PartSet.of(1, 2, 4, 5, 6), 60, 22, PartSet.of(1, 4, 6, 9, 10), 180, 111
    )
    g = residue_subproblem(
        PartSet.of(1, 2, 4, 6, 10), 60, 17, PartSet.of(1, 2, 5, 6, 8), 120, 17
    )
    h = residue_subproblem(
        PartSet.of(1, 2, 3, 4, 6), 12, 1, PartSet.of(1, 2, 4, 5, 10), 20, 1
    )
    if f is None or g is None or h is None:
        raise DegreeUnsupported("A residue class of the known splittings is not polynomial")
    return [
        KnownSplitting(
            name="f",
            subproblem=f,
            expected=[
                _bi({(2, 0): 150, (0, 2): 450, (1, 0): 155, (0, 1): 630, (0, 0): 259}),
                _bi({(2, 0): 30, (0, 2): -90, (1, 0): 31, (0, 1): -126, (0, 0): -36}),
            ],
            obstructed=[0],
        ),
        KnownSplitting(
            name="g",
            subproblem=g,
            expected=[
                _bi({(1, 0): 1, (0, 1): -2}),
                _bi({(1, 0): 15, (0, 1): 30, (0, 0): 14}),
                _bi({(2, 0): 75, (0, 2): 300, (1, 0): 70, (0, 1): 140, (0, 0): 31}),
            ],
            obstructed=[1, 2],
        ),
        KnownSplitting(
            name="h",
            subproblem=h,
            expected=[
                _bi({(2, 0): 6, (0, 2): 10, (1, 0): 9, (0, 1): 12, (0, 0): 5}),
                _bi({(2, 0): 6, (0, 2): -10, (1, 0): 9, (0, 1): -12}),
            ],
        ),
    ]


def check_known_splittings(probes: int = DEFAULT_PROBES) -> List[SplittingCheck]:
    checks = []
    for known in known_splittings():
        case = factor_subproblem(known.subproblem, probes)
        found = set(case.factors)
        matched = all(g.monic()[1] in found for g in known.expected)
        obstructed = all(
            no_solutions_mod_p(known.expected[k], 5).no_solutions for k in known.obstructed
        )
        if not matched:
            logger.warning("%s: expected factors not reproduced", known.name)
        checks.append(SplittingCheck(
            name=known.name, case=case, matched=matched, obstructions_confirmed=obstructed,
        ))
    return checks


__all__ = [
    "KnownSplitting",
    "ReducibleCase",
    "SplittingCheck",
    "candidate_pairs",
    "check_known_splittings",
    "factor_subproblem",
    "known_splittings",
    "reducibility_sweep",
    "top_form_can_split",
]
