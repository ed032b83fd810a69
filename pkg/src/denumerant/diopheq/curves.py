"""Integral curve models Y^2 = f(X) of quadratic-versus-cubic/quartic subproblems."""

from __future__ import annotations

import logging
from enum import Enum
from fractions import Fraction
from math import isqrt, lcm
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from ..errors import DegreeUnsupported
from ..models.certificates import SearchStatus
from ..polyratio import BiPoly, RatPoly, Rational
from .subproblems import ResidueSubproblem

logger = logging.getLogger(__name__)

DEFAULT_X_BOUND = 100_000


class CurveKind(str, Enum):
    WEIERSTRASS = "weierstrass"  # Y^2 = X^3 + a4 X + a6
    QUARTIC = "quartic"  # Y^2 = f(X), deg f = 4


class CurveModel(BaseModel):
    """Y^2 = f(X) with X = x_scale*n + x_shift and Y = y_scale*m + y_shift.

    Substituting the maps gives Y^2 - f(X) = multiplier * (p(m) - q(n)).
    """
    kind: CurveKind
    f: RatPoly = Field(..., description="Right-hand side in X, integer coefficients")
    a4: Optional[int] = Field(None, description="Weierstrass a4")
    a6: Optional[int] = Field(None, description="Weierstrass a6")
    x_scale: int = Field(..., description="X = x_scale*n + x_shift")
    x_shift: int
    y_scale: int = Field(..., description="Y = y_scale*m + y_shift")
    y_shift: int
    multiplier: Rational = Field(..., description="Declared constant multiplier")
    subproblem: Optional[ResidueSubproblem] = Field(None, description="Source subproblem")

    @classmethod
    def weierstrass(cls, a4: int, a6: int) -> CurveModel:
        """A bare model Y^2 = X^3 + a4 X + a6 with identity maps."""
        return cls(
            kind=CurveKind.WEIERSTRASS, f=RatPoly([a6, a4, 0, 1]), a4=a4, a6=a6,
            x_scale=1, x_shift=0, y_scale=1, y_shift=0, multiplier=Fraction(1),
        )

    @property
    def equation(self) -> str:
        return f"Y^2 = {self.f.format('X')}"

    def round_trip_holds(self) -> bool:
        """Y(m)^2 - f(X(n)) == multiplier * F(m, n), symbolically."""
        if self.subproblem is None:
            return False
        y_of_m = BiPoly([RatPoly([self.y_shift]), RatPoly([self.y_scale])])
        f_of_n = BiPoly([self.f.compose(RatPoly([self.x_shift, self.x_scale]))])
        return y_of_m * y_of_m - f_of_n == self.subproblem.polynomial.scale(self.multiplier)

    def forward(self, m: int, n: int) -> Tuple[int, int]:
        return self.x_scale * n + self.x_shift, self.y_scale * m + self.y_shift

    def pull_back(self, point: Tuple[int, int]) -> Optional[Tuple[int, int]]:
        """The nonnegative integral (m, n) over a curve point, if any."""
        x, y = point
        n, rn = divmod(x - self.x_shift, self.x_scale)
        m, rm = divmod(y - self.y_shift, self.y_scale)
        if rn or rm or m < 0 or n < 0:
            return None
        if self.subproblem is not None and not self.subproblem.holds(m, n):
            return None
        return m, n


def reduce_to_curve(sub: ResidueSubproblem) -> CurveModel:
    """Complete the square on the quadratic side and clear denominators.

    With p = a m^2 + b m + c and W = 2a m + b, W^2 = g(n) := 4a q(n) + b^2 - 4ac.
    A cubic g becomes a short Weierstrass model after scaling by its leading
    coefficient and shifting away the X^2 term; a quartic g is kept as is.
    """
    if sub.p.degree != 2:
        raise DegreeUnsupported(f"Left piece of {sub.label} is not quadratic")
    if sub.q.degree not in (3, 4):
        raise DegreeUnsupported(f"Right piece of {sub.label} has degree {sub.q.degree}")
    a, b, c = sub.p.coeff(2), sub.p.coeff(1), sub.p.coeff(0)
    g = sub.q * (4 * a) + (b * b - 4 * a * c)
    # d W = d (2a m + b) must be integral in m; d^2 g integral in n.
    d = _clearing_factor(g, [2 * a, b])
    g = g * (d * d)
    y_scale, y_shift = Fraction(2 * a * d), Fraction(b * d)
    multiplier = Fraction(4 * a * d * d)

    if sub.q.degree == 4:
        model = CurveModel(
            kind=CurveKind.QUARTIC,
            f=g,
            x_scale=1,
            x_shift=0,
            y_scale=int(y_scale),
            y_shift=int(y_shift),
            multiplier=multiplier,
            subproblem=sub,
        )
        if not model.round_trip_holds():
            raise AssertionError(f"Quartic model of {sub.label} fails its round trip")
        return model

    e3, e2, e1, e0 = (int(g.coeff(k)) for k in (3, 2, 1, 0))
    # (e3 W)^2 = Z^3 + e2 Z^2 + e1 e3 Z + e0 e3^2 with Z = e3 n.
    if e2 % 3 == 0:
        z_scale, shift, lift = 1, e2 // 3, 1
    else:
        # Multiply by 3^6 so the shift 3 e2 stays integral.
        z_scale, shift, lift = 9, 3 * e2, 27
    x_scale = z_scale * e3
    x_shift = shift
    y_scale_i = int(y_scale) * e3 * lift
    y_shift_i = int(y_shift) * e3 * lift
    total = multiplier * (e3 * lift) ** 2

    # Expand (X - shift)^3 / z_scale^3 terms into X^3 + a4 X + a6.
    x = RatPoly.variable()
    z = (x - shift) / z_scale
    rhs = (z ** 3 + z * z * e2 + z * (e1 * e3) + e0 * e3 * e3) * (z_scale ** 3)
    assert rhs.coeff(2) == 0 and rhs.coeff(3) == 1
    model = CurveModel(
        kind=CurveKind.WEIERSTRASS,
        f=rhs,
        a4=int(rhs.coeff(1)),
        a6=int(rhs.coeff(0)),
        x_scale=x_scale,
        x_shift=x_shift,
        y_scale=y_scale_i,
        y_shift=y_shift_i,
        multiplier=total,
        subproblem=sub,
    )
    if not model.round_trip_holds():
        raise AssertionError(f"Curve model of {sub.label} fails its round trip")
    logger.debug("%s -> %s", sub.label, model.equation)
    return model


def _clearing_factor(g: RatPoly, linear: List[Fraction]) -> int:
    return lcm(g.denominator_lcm(), *(value.denominator for value in linear))


class CurvePoints(BaseModel):
    model: CurveModel
    x_bound: int
    points: List[Tuple[int, int]] = Field(default_factory=list)
    status: SearchStatus = SearchStatus.BOUNDED


def bounded_curve_points(model: CurveModel, x_bound: int = DEFAULT_X_BOUND) -> CurvePoints:
    """Integral points with |X| <= x_bound, both signs of Y, ascending."""
    if x_bound < 1:
        raise ValueError("x_bound must be positive")
    coeffs = [int(c) for c in reversed(model.f.coeffs)]
    points = []
    for x in range(-x_bound, x_bound + 1):
        value = 0
        for c in coeffs:
            value = value * x + c
        if value < 0:
            continue
        y = isqrt(value)
        if y * y == value:
            points.append((x, -y))
            if y:
                points.append((x, y))
    return CurvePoints(model=model, x_bound=x_bound, points=points)


def pull_back_points(points: CurvePoints) -> List[Tuple[int, int]]:
    """(m, n) solutions of the subproblem over the found curve points."""
    found = {pb for pb in (points.model.pull_back(p) for p in points.points) if pb is not None}
    return sorted(found)
