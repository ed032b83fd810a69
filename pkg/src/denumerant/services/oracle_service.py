"""Exact P_A(n) values for verification, with the evaluation route recorded."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..models.certificates import (
    CertificateKind,
    EquationKind,
    EvaluationRoute,
    SolutionCertificate,
    VerificationStep,
)
from ..partcount import PartitionTable, PartSet, TableCache
from ..polyratio import RatPoly

logger = logging.getLogger(__name__)

DEFAULT_DP_BUDGET = 2_000_000
# Peeling sums at most this many lookups per value.
PEEL_SPAN = 64


class ValueOracle:
    """Routes each value to the cheapest exact method.

    Arguments up to ``dp_budget`` come from a DP table. Larger arguments use
    the certified residue piece of n mod L_A. With ``prefer_peel`` the
    largest part is peeled off, P_A(n) = sum_t P_{A minus a}(n - t*a), which
    shares one sub-table across many sets with a common prefix.
    """

    def __init__(
        self,
        dp_budget: int = DEFAULT_DP_BUDGET,
        prefer_peel: bool = False,
        cache: Optional[TableCache] = None,
    ):
        self.dp_budget = dp_budget
        self.prefer_peel = prefer_peel
        self._cache = cache or TableCache()
        # Certified residue pieces, keyed by (A, residue mod L_A).
        self.pieces: Dict[Tuple[PartSet, int], RatPoly] = {}

    def table(self, parts: PartSet, limit: int) -> PartitionTable:
        return self._cache.table(parts, limit)

    def evaluate(self, parts: PartSet, n: int) -> Tuple[int, EvaluationRoute]:
        if n < 0:
            return 0, EvaluationRoute.DP
        if n <= self.dp_budget:
            if self._can_peel(parts, n):
                return self._peel(parts, [n])[0], EvaluationRoute.PEEL
            return self._cache.table(parts, n)[n], EvaluationRoute.DP
        from ..quasipoly import piece_at

        modulus = parts.lcm
        piece = piece_at(parts, n % modulus, oracle=self)
        return piece.evaluate_int(n // modulus), EvaluationRoute.QUASI

    def value(self, parts: PartSet, n: int) -> int:
        return self.evaluate(parts, n)[0]

    def sample(self, parts: PartSet, xs: Sequence[int]) -> List[int]:
        """Values at many arguments, always from tables (never the quasi route)."""
        if not xs:
            return []
        top = max(xs)
        if self._can_peel(parts, top):
            return self._peel(parts, xs)
        table = self._cache.table(parts, top)
        return [table[x] for x in xs]

    def _can_peel(self, parts: PartSet, top: int) -> bool:
        return self.prefer_peel and parts.size > 1 and top <= PEEL_SPAN * parts.max_part

    def _peel(self, parts: PartSet, xs: Sequence[int]) -> List[int]:
        rest = parts.without_largest()
        assert rest is not None
        a = parts.max_part
        table = self._cache.table(rest, max(max(xs), 0))
        return [sum(table[x - t * a] for t in range(x // a + 1)) if x >= 0 else 0 for x in xs]

    def check(
        self,
        kind: EquationKind,
        left: PartSet,
        right: Optional[PartSet],
        x: int,
        y: int,
        parameter: Optional[int] = None,
        target: Optional[RatPoly] = None,
    ) -> VerificationStep:
        """Evaluate one instance of P_A(x) = P_B(y), y^2 = P_A(x) or P_A(x) = f(y)."""
        value, route = self.evaluate(left, x)
        if kind == EquationKind.SQUARE:
            ok = x >= 0 and y * y == value
        elif kind == EquationKind.POLY_VALUE:
            assert target is not None
            ok = x >= 0 and target.evaluate(y) == value
        else:
            assert right is not None
            other, other_route = self.evaluate(right, y)
            ok = x >= 0 and y >= 0 and value == other
            if other_route != EvaluationRoute.DP:
                route = other_route
        return VerificationStep(parameter=parameter, x=x, y=y, value=value, route=route, ok=ok)


FAMILY_CHECKS = 25


def verify_certificate(cert: SolutionCertificate, dp_budget: int = DEFAULT_DP_BUDGET) -> bool:
    """Re-verify a certificate with a fresh oracle sharing no tables or pieces."""
    oracle = ValueOracle(dp_budget=dp_budget)
    if cert.kind == CertificateKind.POINT:
        assert cert.point is not None
        x, y = cert.point
        step = oracle.check(cert.equation_kind, cert.left, cert.right, x, y, target=cert.target)
        return step.ok and (cert.value is None or step.value == cert.value)
    if cert.kind == CertificateKind.POLY_FAMILY:
        for u in cert.parameters(FAMILY_CHECKS):
            x, y = cert.family_point(u)
            if not oracle.check(
                cert.equation_kind, cert.left, cert.right, x, y, u, target=cert.target
            ).ok:
                logger.warning("Certificate %s fails at u=%d", cert.equation, u)
                return False
        return True
    if not cert.transcript:
        return False
    return all(
        oracle.check(
            cert.equation_kind, cert.left, cert.right, s.x, s.y, s.parameter, cert.target
        ).ok
        for s in cert.transcript
    )
