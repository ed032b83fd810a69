"""Heuristic bivariate factor search and modular obstruction checks."""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

import sympy
from pydantic import BaseModel, Field

from ..errors import InconsistentPoints, NonIntegerCoefficients, ZeroPolynomial
from .algebra import interpolate
from .bipoly import BiPoly
from .ratpoly import RatPoly, Rational

logger = logging.getLogger(__name__)

DEFAULT_PROBES = 6
MAX_MODULUS = 97

_X = sympy.Symbol("x")


class Factorization(BaseModel):
    """F = constant * prod(factors), factors monic in the search variable."""
    constant: Rational = Field(..., description="Rational constant split off F")
    factors: List[BiPoly] = Field(default_factory=list)
    complete: bool = Field(True, description="Every degree level was fully enumerated")
    probes: List[int] = Field(default_factory=list, description="Probe abscissas used")

    @property
    def reducible(self) -> bool:
        return len(self.factors) > 1

    def product(self) -> BiPoly:
        result = BiPoly([self.constant])
        for factor in self.factors:
            result = result * factor
        return result


class ModularCheck(BaseModel):
    prime: int = Field(..., description="Modulus p of the check")
    no_solutions: bool = Field(..., description="F has no zero over (Z/p)^2")
    witness: Optional[Tuple[int, int]] = Field(None, description="A zero (m, n) mod p")


# ---------------------------------------------------------------------------
# Univariate factoring through sympy
# ---------------------------------------------------------------------------

def _from_sympy(value: object) -> Fraction:
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


def univariate_factors(f: RatPoly) -> List[Tuple[RatPoly, int]]:
    """Monic irreducible factors over Q with multiplicities."""
    if f.is_zero:
        raise ZeroPolynomial("Cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)]
    poly = sympy.Poly(coeffs, _X, domain=sympy.QQ)
    _, factors = poly.factor_list()
    result = []
    for factor, mult in factors:
        rp = RatPoly(_from_sympy(c) for c in reversed(factor.all_coeffs()))
        result.append((rp.monic(), int(mult)))
    return result


def monic_divisors(factors: Sequence[Tuple[RatPoly, int]], degree: int) -> List[RatPoly]:
    """All monic divisors of the given degree built from a factor list."""
    out: List[RatPoly] = []

    def _walk(idx: int, acc: RatPoly) -> None:
        if acc.degree == degree:
            out.append(acc)
            return
        if idx == len(factors) or acc.degree > degree:
            return
        factor, mult = factors[idx]
        current = acc
        for _ in range(mult + 1):
            if current.degree > degree:
                break
            _walk(idx + 1, current)
            current = current * factor

    _walk(0, RatPoly.constant(1))
    return out


# ---------------------------------------------------------------------------
# Bivariate search
# ---------------------------------------------------------------------------

def _find_factor(
    poly: BiPoly,
    degree: int,
    probes: Sequence[int],
    ratio: Fraction,
) -> Tuple[Optional[BiPoly], bool]:
    """Look for a monic-in-m factor of the given degree.

    Returns (factor, exhaustive). The n-degree of the m^k coefficient of any
    factor is at most (degree - k) * ratio, from the weighted degree of F.
    """
    bounds = [int((degree - k) * ratio) for k in range(degree)]
    need = max(bounds) + 1
    if need > len(probes):
        return None, False

    candidates: Dict[int, Set[Tuple[Fraction, ...]]] = {}
    for n0 in probes:
        specialized = poly.at_n(n0)
        divisors = monic_divisors(univariate_factors(specialized), degree)
        if not divisors:
            return None, True
        candidates[n0] = {d.coeffs[:degree] for d in divisors}

    lifting, checking = list(probes[:need]), list(probes[need:])
    ordered = [sorted(candidates[n0]) for n0 in lifting]
    for combo in itertools.product(*ordered):
        coeffs: List[RatPoly] = []
        try:
            for k in range(degree):
                pts = [(n0, combo[idx][k]) for idx, n0 in enumerate(lifting)]
                coeffs.append(interpolate(pts, bounds[k]))
        except InconsistentPoints:
            continue
        factor = BiPoly(coeffs + [RatPoly.constant(1)])
        if any(factor.at_n(n0).coeffs[:degree] not in candidates[n0] for n0 in checking):
            continue
        _, rem = poly.divmod_monic(factor)
        if rem.is_zero:
            return factor, True
    return None, True


def bifactor_search(f: BiPoly, probes: int = DEFAULT_PROBES) -> Factorization:
    """Factor F(m, n) by specializing n, lifting in n and dividing exactly.

    Every returned factor divides F exactly. Completeness is not guaranteed;
    ``complete`` is False when some degree level could not be enumerated.
    """
    if f.is_zero:
        raise ZeroPolynomial("Cannot factor the zero polynomial")
    probe_points = list(range(probes))

    if f.deg_m <= 0:
        inner = f.coeff(0)
        if inner.degree <= 0:
            return Factorization(constant=inner.lead, factors=[], probes=probe_points)
        pieces = [BiPoly([g]) for g, mult in univariate_factors(inner) for _ in range(mult)]
        return Factorization(constant=inner.lead, factors=pieces, probes=probe_points)

    if f.lead_m.degree > 0:
        swapped = f.swap()
        if swapped.lead_m.degree == 0:
            result = bifactor_search(swapped, probes)
            return Factorization(
                constant=result.constant,
                factors=[g.swap() for g in result.factors],
                complete=result.complete,
                probes=probe_points,
            )
        logger.debug("No constant leading coefficient in either variable: %s", f)
        return Factorization(constant=1, factors=[f], complete=False, probes=probe_points)

    constant, remaining = f.monic()
    ratio = Fraction(max(f.deg_n, 0), f.deg_m)
    factors: List[BiPoly] = []
    complete = True
    degree = 1
    while remaining.deg_m >= 2 * degree:
        found, exhaustive = _find_factor(remaining, degree, probe_points, ratio)
        complete = complete and exhaustive
        if found is None:
            degree += 1
            continue
        logger.debug("Found factor of m-degree %d: %s", degree, found)
        factors.append(found)
        remaining, _ = remaining.divmod_monic(found)
    if remaining.deg_m > 0:
        factors.append(remaining)
    return Factorization(
        constant=constant, factors=factors, complete=complete, probes=probe_points
    )


# ---------------------------------------------------------------------------
# Modular obstructions
# ---------------------------------------------------------------------------

def no_solutions_mod_p(
    f: BiPoly, p: int, clear_denominators: bool = True
) -> ModularCheck:
    """Enumerate (Z/p)^2 looking for a zero of F.

    Non-integer F is replaced by its primitive part, which has the same
    integer zeros. With ``clear_denominators=False`` it raises
    NonIntegerCoefficients instead.
    """
    if p < 2 or p > MAX_MODULUS:
        raise ValueError(f"Modulus must lie in 2..{MAX_MODULUS}, got {p}")
    poly = f
    if not f.is_integral():
        if not clear_denominators:
            raise NonIntegerCoefficients(f"{f} has non-integer coefficients")
        _, poly = f.primitive()
    terms = [(i, j, int(c) % p) for (i, j), c in poly.terms().items()]
    for m in range(p):
        for n in range(p):
            total = sum(c * pow(m, i, p) * pow(n, j, p) for i, j, c in terms)
            if total % p == 0:
                return ModularCheck(prime=p, no_solutions=False, witness=(m, n))
    return ModularCheck(prime=p, no_solutions=True)
