"""Polynomials in two variables m, n over the rationals.

Stored as a tuple of RatPoly coefficients in n, one per power of m.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Any, Dict, Iterable, List, Optional, Tuple

from pydantic import GetCoreSchemaHandler
from pydantic_core import core_schema

from .ratpoly import RatPoly, to_fraction


class BiPoly:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        values = [c if isinstance(c, RatPoly) else RatPoly.constant(c) for c in coeffs]
        while values and values[-1].is_zero:
            values.pop()
        self._coeffs: Tuple[RatPoly, ...] = tuple(values)

    @classmethod
    def m(cls) -> BiPoly:
        return cls([0, 1])

    @classmethod
    def n(cls) -> BiPoly:
        return cls([RatPoly.variable()])

    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int, int], Any]) -> BiPoly:
        """Build from {(i, j): c} meaning c * m^i * n^j."""
        if not terms:
            return cls()
        deg_m = max(i for i, _ in terms)
        rows: List[Dict[int, Fraction]] = [dict() for _ in range(deg_m + 1)]
        for (i, j), c in terms.items():
            rows[i][j] = rows[i].get(j, Fraction(0)) + to_fraction(c)
        polys = []
        for row in rows:
            size = max(row) + 1 if row else 0
            polys.append(RatPoly(row.get(j, 0) for j in range(size)))
        return cls(polys)

    @classmethod
    def from_separated(cls, p: RatPoly, q: RatPoly) -> BiPoly:
        """The polynomial p(m) - q(n)."""
        coeffs = [RatPoly.constant(c) for c in p.coeffs] or [RatPoly()]
        coeffs[0] = coeffs[0] - q
        return cls(coeffs)

    # ------------------------------------------------------------------

    @property
    def coeffs(self) -> Tuple[RatPoly, ...]:
        return self._coeffs

    def coeff(self, i: int) -> RatPoly:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return RatPoly()

    @property
    def deg_m(self) -> int:
        return len(self._coeffs) - 1

    @property
    def deg_n(self) -> int:
        return max((c.degree for c in self._coeffs), default=-1)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def lead_m(self) -> RatPoly:
        return self._coeffs[-1] if self._coeffs else RatPoly()

    def terms(self) -> Dict[Tuple[int, int], Fraction]:
        out: Dict[Tuple[int, int], Fraction] = {}
        for i, poly in enumerate(self._coeffs):
            for j, c in enumerate(poly.coeffs):
                if c:
                    out[(i, j)] = c
        return out

    def swap(self) -> BiPoly:
        """Exchange the roles of m and n."""
        return BiPoly.from_terms({(j, i): c for (i, j), c in self.terms().items()})

    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other: Any) -> Optional[BiPoly]:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return BiPoly([other])
        return None

    def __eq__(self, other: object) -> bool:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return self._coeffs == poly._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> BiPoly:
        return BiPoly(-c for c in self._coeffs)

    def __add__(self, other: Any) -> BiPoly:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        size = max(len(self._coeffs), len(poly._coeffs))
        return BiPoly(self.coeff(i) + poly.coeff(i) for i in range(size))

    __radd__ = __add__

    def __sub__(self, other: Any) -> BiPoly:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return self + (-poly)

    def __rsub__(self, other: Any) -> BiPoly:
        return -self + other

    def __mul__(self, other: Any) -> BiPoly:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        if self.is_zero or poly.is_zero:
            return BiPoly()
        out = [RatPoly()] * (len(self._coeffs) + len(poly._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(poly._coeffs):
                out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> BiPoly:
        result = BiPoly([1])
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: Any) -> BiPoly:
        c = to_fraction(factor)
        return BiPoly(p * c for p in self._coeffs)

    def divmod_monic(self, divisor: BiPoly) -> Tuple[BiPoly, BiPoly]:
        """Division in m by a divisor whose leading m-coefficient is 1."""
        if divisor.lead_m != 1:
            raise ValueError("divisor must be monic in m")
        d = divisor.deg_m
        rem = list(self._coeffs)
        if len(rem) - 1 < d:
            return BiPoly(), self
        quot = [RatPoly()] * (len(rem) - d)
        for k in range(len(rem) - 1 - d, -1, -1):
            c = rem[k + d]
            quot[k] = c
            if not c.is_zero:
                for t, g in enumerate(divisor._coeffs):
                    rem[k + t] = rem[k + t] - c * g
        return BiPoly(quot), BiPoly(rem[:d])

    # ------------------------------------------------------------------

    def at_n(self, n0: Any) -> RatPoly:
        """Specialize n, leaving a polynomial in m."""
        return RatPoly(c.evaluate(n0) for c in self._coeffs)

    def at_m(self, m0: Any) -> RatPoly:
        """Specialize m, leaving a polynomial in n."""
        point = to_fraction(m0)
        result = RatPoly()
        for c in reversed(self._coeffs):
            result = result * point + c
        return result

    def evaluate(self, m0: Any, n0: Any) -> Fraction:
        return self.at_n(n0).evaluate(m0)

    def substitute(self, m_poly: RatPoly, n_poly: RatPoly) -> RatPoly:
        """Compose with m = m_poly(u), n = n_poly(u), giving a polynomial in u."""
        result = RatPoly()
        for c in reversed(self._coeffs):
            result = result * m_poly + c.compose(n_poly)
        return result

    def denominator_lcm(self) -> int:
        result = 1
        for c in self._coeffs:
            d = c.denominator_lcm()
            result = result * d // gcd(result, d)
        return result

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self._coeffs)

    def primitive(self) -> Tuple[Fraction, BiPoly]:
        """Split into (c, P) with P integral and coefficient gcd 1."""
        if self.is_zero:
            return Fraction(0), self
        scale = self.denominator_lcm()
        scaled = self.scale(scale)
        g = 0
        for c in scaled.terms().values():
            g = gcd(g, int(c))
        return Fraction(g, scale), scaled.scale(Fraction(1, g))

    def monic(self) -> Tuple[Fraction, BiPoly]:
        """Split off a constant leading m-coefficient."""
        lead = self.lead_m
        if lead.degree != 0:
            raise ValueError("leading coefficient in m is not constant")
        return lead.lead, self.scale(1 / lead.lead)

    def to_strings(self) -> List[List[str]]:
        return [c.to_strings() for c in self._coeffs]

    def format(self) -> str:
        parts = []
        for (i, j), c in sorted(self.terms().items(), reverse=True):
            mono = "*".join(
                p for p in (
                    "" if i == 0 else ("m" if i == 1 else f"m^{i}"),
                    "" if j == 0 else ("n" if j == 1 else f"n^{j}"),
                ) if p
            )
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"BiPoly({self.format()})"

    @classmethod
    def _validate(cls, value: Any) -> BiPoly:
        if isinstance(value, BiPoly):
            return value
        if isinstance(value, (list, tuple)):
            return cls(RatPoly(row) for row in value)
        raise ValueError(f"Cannot interpret {value!r} as a bivariate polynomial")

    @classmethod
    def __get_pydantic_core_schema__(
        cls, source: Any, handler: GetCoreSchemaHandler
    ) -> core_schema.CoreSchema:
        return core_schema.no_info_plain_validator_function(
            cls._validate,
            serialization=core_schema.plain_serializer_function_ser_schema(
                lambda poly: poly.to_strings(), when_used="json"
            ),
        )
