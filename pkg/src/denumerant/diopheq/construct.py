"""Solutions of P_A(x) = f(y) for two coprime parts."""

import logging
import math
from typing import Optional

from ..errors import HypothesisViolated, VerificationFailed
from ..models.certificates import CertificateKind, EquationKind, SolutionCertificate
from ..partcount import PartSet
from ..polyratio import RatPoly
from ..services.oracle_service import ValueOracle

logger = logging.getLogger(__name__)


def a1a2_construct(
    parts: PartSet, f: RatPoly, m: int, oracle: Optional[ValueOracle] = None
) -> SolutionCertificate:
    """x = a1*a2*(f(m) - 1) has exactly f(m) partitions into {a1, a2}.

    A representation a1*u + a2*v = a1*a2*(f(m) - 1) forces v = a1*t with
    0 <= t <= f(m) - 1, and each t gives one.
    """
    if parts.size != 2:
        raise HypothesisViolated(f"Two parts required, got {parts}")
    a1, a2 = parts.parts
    if math.gcd(a1, a2) != 1:
        raise HypothesisViolated(f"Parts of {parts} are not coprime")
    if f.degree < 1 or f.lead <= 0:
        raise HypothesisViolated(f"{f.format('y')} needs positive degree and leading coefficient")
    value = f.evaluate(m)
    if value.denominator != 1:
        raise HypothesisViolated(f"f({m}) = {value} is not an integer")
    if value <= 1:
        raise HypothesisViolated(f"f({m}) = {value} must exceed 1")

    x = a1 * a2 * (int(value) - 1)
    oracle = oracle or ValueOracle()
    step = oracle.check(EquationKind.POLY_VALUE, parts, None, x, m, target=f)
    cert = SolutionCertificate(
        equation=f"P_{parts}(x) = {f.format('y')}",
        equation_kind=EquationKind.POLY_VALUE,
        left=parts,
        target=f,
        kind=CertificateKind.POINT,
        point=(x, m),
        value=int(value),
        verified=step.ok,
        transcript=[step],
    )
    if not step.ok:
        logger.warning("%s fails at (%d, %d)", cert.equation, x, m)
        raise VerificationFailed(f"({x}, {m}) fails {cert.equation}: P_A(x) = {step.value}")
    return cert
