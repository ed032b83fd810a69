"""Interpolation, squarefree structure, square roots and discriminants."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple, TypeVar, Union

from pydantic import BaseModel, Field

from ..errors import (
    DegreeUnsupported,
    DuplicateAbscissa,
    InconsistentPoints,
    ZeroPolynomial,
)
from .bipoly import BiPoly
from .ratpoly import RatPoly, Rational, poly_gcd, rational_sqrt, to_fraction

logger = logging.getLogger(__name__)

T = TypeVar("T")


# ---------------------------------------------------------------------------
# Interpolation
# ---------------------------------------------------------------------------

def interpolate(points: Sequence[Tuple[Any, Any]], degree: int) -> RatPoly:
    """Newton interpolation through the first degree+1 points.

    Remaining points are checked against the result.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    pts = [(to_fraction(x), to_fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa(f"Repeated abscissa among {len(xs)} points")
    if len(pts) < degree + 1:
        raise ValueError(f"Need {degree + 1} points, got {len(pts)}")

    base = pts[: degree + 1]
    table = [y for _, y in base]
    newton = [table[0]]
    for level in range(1, degree + 1):
        table = [
            (table[i + 1] - table[i]) / (base[i + level][0] - base[i][0])
            for i in range(len(table) - 1)
        ]
        newton.append(table[0])

    poly = RatPoly.constant(newton[-1])
    for k in range(degree - 1, -1, -1):
        poly = poly * RatPoly.linear(1, -base[k][0]) + newton[k]

    for x, y in pts[degree + 1:]:
        if poly.evaluate(x) != y:
            raise InconsistentPoints(
                f"Point ({x}, {y}) is off the degree-{degree} interpolant {poly}"
            )
    return poly


# ---------------------------------------------------------------------------
# Squarefree decomposition and square roots
# ---------------------------------------------------------------------------

class SquarefreeFactor(BaseModel):
    factor: RatPoly = Field(..., description="Monic squarefree factor")
    multiplicity: int = Field(..., description="Exponent of the factor")


class SquarefreeDecomposition(BaseModel):
    """f = content * prod(factor ** multiplicity)."""
    content: Rational = Field(..., description="Leading coefficient of the input")
    factors: List[SquarefreeFactor] = Field(default_factory=list)

    def reconstruct(self) -> RatPoly:
        result = RatPoly.constant(self.content)
        for item in self.factors:
            result = result * item.factor ** item.multiplicity
        return result

    def odd_part(self) -> RatPoly:
        """Product of the factors with odd multiplicity (monic)."""
        return RatPoly.product(f.factor for f in self.factors if f.multiplicity % 2)

    def square_cofactor(self) -> RatPoly:
        """h with f = content * odd_part * h**2."""
        return RatPoly.product(
            f.factor ** (f.multiplicity // 2) for f in self.factors
        )


def squarefree_decompose(f: RatPoly) -> SquarefreeDecomposition:
    """Yun's algorithm over the rationals."""
    if f.is_zero:
        raise ZeroPolynomial("Cannot decompose the zero polynomial")
    content = f.lead
    monic = f.monic()
    factors: List[SquarefreeFactor] = []
    if monic.degree <= 0:
        return SquarefreeDecomposition(content=content, factors=factors)

    deriv = monic.derivative()
    a0 = poly_gcd(monic, deriv)
    b = monic / a0
    c = deriv / a0
    d = c - b.derivative()
    multiplicity = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            factors.append(SquarefreeFactor(factor=a, multiplicity=multiplicity))
        b = b / a
        c = d / a
        d = c - b.derivative()
        multiplicity += 1
    return SquarefreeDecomposition(content=content, factors=factors)


def perfect_square_root(f: RatPoly) -> Optional[RatPoly]:
    """g with g**2 == f and positive leading coefficient, else None."""
    if f.is_zero:
        raise ZeroPolynomial("Square root of the zero polynomial")
    if f.degree % 2:
        return None
    lead_root = rational_sqrt(f.lead)
    if lead_root is None:
        return None
    half = f.degree // 2
    # Solve for coefficients of g from the top down.
    g = [Fraction(0)] * (half + 1)
    g[half] = lead_root
    for k in range(half - 1, -1, -1):
        target = f.coeff(half + k)
        acc = Fraction(0)
        for i in range(k + 1, half):
            j = half + k - i
            if k < j < half:
                acc += g[i] * g[j]
        g[k] = (target - acc) / (2 * lead_root)
    root = RatPoly(g)
    if root * root != f:
        return None
    return root


# ---------------------------------------------------------------------------
# Resultants and discriminants
# ---------------------------------------------------------------------------

def bareiss_determinant(matrix: Sequence[Sequence[T]], zero: T, one: T) -> T:
    """Fraction-free determinant over an integral domain with exact division."""
    a = [list(row) for row in matrix]
    size = len(a)
    if size == 0:
        return one
    sign = 1
    prev = one
    for k in range(size - 1):
        if a[k][k] == zero:
            swap = next((r for r in range(k + 1, size) if a[r][k] != zero), None)
            if swap is None:
                return zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev  # type: ignore
        prev = a[k][k]
    det = a[size - 1][size - 1]
    return det if sign > 0 else -det  # type: ignore


def sylvester_matrix(f: Sequence[T], g: Sequence[T], zero: T) -> List[List[T]]:
    """Sylvester matrix of coefficient lists given low degree first."""
    deg_f, deg_g = len(f) - 1, len(g) - 1
    size = deg_f + deg_g
    fh, gh = list(reversed(f)), list(reversed(g))
    rows: List[List[T]] = []
    for i in range(deg_g):
        row = [zero] * size
        row[i:i + deg_f + 1] = fh
        rows.append(row)
    for i in range(deg_f):
        row = [zero] * size
        row[i:i + deg_g + 1] = gh
        rows.append(row)
    return rows


def resultant(f: Sequence[T], g: Sequence[T], zero: T, one: T) -> T:
    return bareiss_determinant(sylvester_matrix(f, g, zero), zero, one)


def _discriminant_of_coeffs(coeffs: Sequence[T], zero: T, one: T) -> T:
    degree = len(coeffs) - 1
    deriv = [coeffs[k] * k for k in range(1, degree + 1)]  # type: ignore
    res = resultant(coeffs, deriv, zero, one)
    sign = -1 if (degree * (degree - 1) // 2) % 2 else 1
    return (res * sign) / coeffs[-1]  # type: ignore


def discriminant_closed_form(coeffs: Sequence[Any]) -> Any:
    """Textbook discriminant for degree 2 and 3, coefficients low degree first."""
    if len(coeffs) == 3:
        c, b, a = coeffs
        return b * b - 4 * a * c
    if len(coeffs) == 4:
        d, c, b, a = coeffs
        return (
            b * b * c * c
            - 4 * a * c * c * c
            - 4 * b * b * b * d
            - 27 * a * a * d * d
            + 18 * a * b * c * d
        )
    raise DegreeUnsupported(f"No closed form for degree {len(coeffs) - 1}")


def discriminant(
    f: Union[RatPoly, BiPoly], variable: str = "m"
) -> Union[Fraction, RatPoly]:
    """Discriminant via the resultant of f and its derivative.

    For a BiPoly the result is a polynomial in the other variable.
    """
    if isinstance(f, BiPoly):
        if variable not in ("m", "n"):
            raise ValueError(f"Unknown variable {variable!r}")
        poly = f if variable == "m" else f.swap()
        coeffs_b = list(poly.coeffs)
        _check_degree(len(coeffs_b) - 1)
        return _discriminant_of_coeffs(coeffs_b, RatPoly(), RatPoly.constant(1))
    coeffs = list(f.coeffs)
    _check_degree(len(coeffs) - 1)
    return _discriminant_of_coeffs(coeffs, Fraction(0), Fraction(1))


def _check_degree(degree: int) -> None:
    if degree < 2 or degree > 4:
        raise DegreeUnsupported(f"Discriminant supports degrees 2..4, got {degree}")
