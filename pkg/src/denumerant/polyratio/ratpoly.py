"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Annotated, Any, Iterable, List, Optional, Tuple, Union

from pydantic import GetCoreSchemaHandler, PlainSerializer, PlainValidator
from pydantic_core import core_schema

Scalar = Union[int, Fraction]


def to_fraction(value: Any) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Cannot interpret {value!r} as a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"Cannot interpret {value!r} as a rational")


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


Rational = Annotated[
    Fraction,
    PlainValidator(to_fraction),
    PlainSerializer(format_fraction, return_type=str, when_used="json"),
]

# Values in certificates and count tables overflow 64-bit JSON consumers.
BigInt = Annotated[int, PlainSerializer(str, return_type=str, when_used="json")]


class RatPoly:
    """Immutable polynomial, coefficients stored low degree first.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        values = [to_fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Any) -> RatPoly:
        return cls([value])

    @classmethod
    def variable(cls) -> RatPoly:
        return cls([0, 1])

    @classmethod
    def linear(cls, alpha: Any, beta: Any) -> RatPoly:
        """The polynomial alpha*n + beta."""
        return cls([beta, alpha])

    @classmethod
    def product(cls, factors: Iterable[RatPoly]) -> RatPoly:
        result = cls.constant(1)
        for factor in factors:
            result = result * factor
        return result

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def lead(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def denominator_lcm(self) -> int:
        result = 1
        for c in self._coeffs:
            result = result * c.denominator // gcd(result, c.denominator)
        return result

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other: Any) -> Optional[RatPoly]:
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatPoly.constant(other)
        return None

    def __eq__(self, other: object) -> bool:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return self._coeffs == poly._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __neg__(self) -> RatPoly:
        return RatPoly(-c for c in self._coeffs)

    def __add__(self, other: Any) -> RatPoly:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        size = max(len(self._coeffs), len(poly._coeffs))
        return RatPoly(self.coeff(k) + poly.coeff(k) for k in range(size))

    __radd__ = __add__

    def __sub__(self, other: Any) -> RatPoly:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return self + (-poly)

    def __rsub__(self, other: Any) -> RatPoly:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return poly - self

    def __mul__(self, other: Any) -> RatPoly:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        if self.is_zero or poly.is_zero:
            return RatPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(poly._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(poly._coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RatPoly:
        if exponent < 0:
            raise ValueError("negative exponent")
        result = RatPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: Any) -> Tuple[RatPoly, RatPoly]:
        divisor = self._coerce(other)
        if divisor is None:
            return NotImplemented
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return RatPoly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        lead = divisor.lead
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lead
            quot[k] = c
            if c:
                for t, d in enumerate(divisor._coeffs):
                    rem[k + t] -= c * d
        return RatPoly(quot), RatPoly(rem[:dd])

    def __floordiv__(self, other: Any) -> RatPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: Any) -> RatPoly:
        return divmod(self, other)[1]

    def __truediv__(self, other: Any) -> RatPoly:
        """Scalar division, or exact polynomial division."""
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, RatPoly):
            if other.degree == 0:
                return self * (1 / other.lead)
            quot, rem = divmod(self, other)
            if not rem.is_zero:
                raise ArithmeticError(f"{other} does not divide {self}")
            return quot
        return NotImplemented

    # ------------------------------------------------------------------
    # Calculus and substitution
    # ------------------------------------------------------------------

    def evaluate(self, x: Any) -> Fraction:
        value = Fraction(0)
        point = to_fraction(x)
        for c in reversed(self._coeffs):
            value = value * point + c
        return value

    def __call__(self, x: Any) -> Fraction:
        return self.evaluate(x)

    def evaluate_int(self, x: int) -> int:
        """Evaluate where the value is known to be an integer."""
        value = self.evaluate(x)
        if value.denominator != 1:
            raise ArithmeticError(f"{self} is not integral at {x}")
        return value.numerator

    def derivative(self) -> RatPoly:
        return RatPoly(k * c for k, c in enumerate(self._coeffs) if k)

    def compose(self, inner: RatPoly) -> RatPoly:
        result = RatPoly()
        for c in reversed(self._coeffs):
            result = result * inner + c
        return result

    def compose_linear(self, alpha: Any, beta: Any) -> RatPoly:
        """Substitute n -> alpha*n + beta."""
        return self.compose(RatPoly.linear(alpha, beta))

    def monic(self) -> RatPoly:
        if self.is_zero:
            return self
        return self * (1 / self.lead)

    def primitive(self) -> Tuple[Fraction, RatPoly]:
        """Split into (c, p) with p integral, coprime coefficients, positive lead."""
        if self.is_zero:
            return Fraction(0), self
        scale = self.denominator_lcm()
        ints = [int(c * scale) for c in self._coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, scale), RatPoly(Fraction(v, g) for v in ints)

    # ------------------------------------------------------------------
    # Presentation
    # ------------------------------------------------------------------

    def to_strings(self) -> List[str]:
        return [format_fraction(c) for c in self._coeffs]

    def format(self, var: str = "n") -> str:
        if self.is_zero:
            return "0"
        terms: List[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append(f"{sign} {body}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RatPoly({self.to_strings()})"

    @classmethod
    def _validate(cls, value: Any) -> RatPoly:
        if isinstance(value, RatPoly):
            return value
        if isinstance(value, (list, tuple)):
            return cls(value)
        raise ValueError(f"Cannot interpret {value!r} as a polynomial")

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


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def arith(op: str, *operands: Any) -> Union[RatPoly, Fraction]:
    """Dispatch a named polynomial operation.

    Supported: add, sub, mul, evaluate, derivative, compose_linear.
    """
    if op == "add":
        return operands[0] + operands[1]
    elif op == "sub":
        return operands[0] - operands[1]
    elif op == "mul":
        return operands[0] * operands[1]
    elif op == "evaluate":
        return operands[0].evaluate(operands[1])
    elif op == "derivative":
        return operands[0].derivative()
    elif op == "compose_linear":
        return operands[0].compose_linear(operands[1], operands[2])
    raise ValueError(f"Unknown polynomial operation: {op}")
