"""Brute-force solutions of P_A(x) = P_B(y) inside a box."""

import logging
from collections import defaultdict
from typing import Dict, List, Optional

from ..errors import BudgetExceeded
from ..models.certificates import (
    CertificateKind,
    EquationKind,
    EvaluationRoute,
    SolutionCertificate,
    VerificationStep,
)
from ..partcount import PartitionTable, PartSet, TableCache

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BUDGET = 50_000_000


def _index(table: PartitionTable, start: int, stop: int) -> Dict[int, List[int]]:
    index: Dict[int, List[int]] = defaultdict(list)
    for k in range(start, stop + 1):
        index[table[k]].append(k)
    return index


def brute_force_search(
    left: PartSet,
    right: PartSet,
    x_max: int,
    y_max: int,
    positive: bool = True,
    budget: int = DEFAULT_SEARCH_BUDGET,
    cache: Optional[TableCache] = None,
) -> List[SolutionCertificate]:
    """Every pair with P_A(x) = P_B(y), ordered by value, then x, then y.

    With ``positive`` the box starts at 1 in both coordinates, otherwise at 0.
    The smaller table is indexed by value and the larger one is streamed
    against it.
    """
    if x_max < 0 or y_max < 0:
        raise ValueError("Bounds must be nonnegative")
    if x_max + y_max > budget:
        raise BudgetExceeded(f"x_max + y_max = {x_max + y_max} exceeds the budget {budget}")
    cache = cache or TableCache()
    start = 1 if positive else 0
    left_table = cache.table(left, x_max)
    right_table = cache.table(right, y_max)

    pairs = []
    if y_max <= x_max:
        index = _index(right_table, start, y_max)
        for x in range(start, x_max + 1):
            value = left_table[x]
            pairs.extend((value, x, y) for y in index.get(value, ()))
    else:
        index = _index(left_table, start, x_max)
        for y in range(start, y_max + 1):
            value = right_table[y]
            pairs.extend((value, x, y) for x in index.get(value, ()))
    pairs.sort()
    logger.info("%s vs %s in [%d..%d]x[%d..%d]: %d pairs",
                left, right, start, x_max, start, y_max, len(pairs))

    equation = f"P_{left}(x) = P_{right}(y)"
    return [
        SolutionCertificate(
            equation=equation,
            equation_kind=EquationKind.EQUAL_VALUES,
            left=left,
            right=right,
            kind=CertificateKind.POINT,
            point=(x, y),
            value=value,
            verified=True,
            transcript=[
                VerificationStep(x=x, y=y, value=value, route=EvaluationRoute.DP, ok=True)
            ],
        )
        for value, x, y in pairs
    ]
