"""Exact restricted partition counts P_A(n).

The dynamic-programming tables here are the ground truth every other module
is checked against.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .errors import EmptyPartSet, NonCoprime, WrongArity

logger = logging.getLogger(__name__)


class PartSet(BaseModel):
    """A finite set of distinct positive parts."""
    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = Field(..., description="Strictly increasing positive parts")

    @field_validator("parts", mode="before")
    @classmethod
    def _canonical(cls, value: Iterable[int]) -> Tuple[int, ...]:
        items = sorted({int(v) for v in value})
        if not items:
            raise ValueError("part set must be nonempty")
        if items[0] < 1:
            raise ValueError("parts must be positive")
        return tuple(items)

    @classmethod
    def of(cls, *parts: int) -> PartSet:
        if not parts:
            raise EmptyPartSet("A part set needs at least one part")
        if min(parts) < 1:
            raise ValueError(f"Parts must be positive: {parts}")
        return cls(parts=parts)

    @classmethod
    def parse(cls, text: str) -> PartSet:
        """Parse "1,2,3" (braces and spaces tolerated)."""
        cleaned = text.strip().strip("{}[]()")
        tokens = [t for t in cleaned.replace(" ", "").split(",") if t]
        if not tokens:
            raise EmptyPartSet(f"No parts in {text!r}")
        return cls.of(*(int(t) for t in tokens))

    @classmethod
    def first(cls, k: int) -> PartSet:
        """{1, ..., k}."""
        return cls.of(*range(1, k + 1))

    @property
    def lcm(self) -> int:
        return math.lcm(*self.parts)

    @property
    def gcd(self) -> int:
        return math.gcd(*self.parts)

    @property
    def size(self) -> int:
        return len(self.parts)

    @property
    def product(self) -> int:
        return math.prod(self.parts)

    @property
    def max_part(self) -> int:
        return self.parts[-1]

    @property
    def label(self) -> str:
        return ",".join(str(a) for a in self.parts)

    def without_largest(self) -> Optional[PartSet]:
        if self.size == 1:
            return None
        return PartSet(parts=self.parts[:-1])

    def __str__(self) -> str:
        return "{" + self.label + "}"


class PartitionTable:
    """Immutable values P_A(0..limit)."""

    __slots__ = ("parts", "limit", "_values")

    def __init__(self, parts: PartSet, values: List[int]):
        self.parts = parts
        self.limit = len(values) - 1
        self._values = values

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        return self._values[n]

    def __len__(self) -> int:
        return len(self._values)

    def as_list(self) -> List[int]:
        return list(self._values)


def count_table(parts: PartSet, limit: int) -> PartitionTable:
    """Coin-change DP, parts in ascending order."""
    if limit < 0:
        raise ValueError(f"limit must be nonnegative, got {limit}")
    values = [0] * (limit + 1)
    values[0] = 1
    for a in parts.parts:
        for n in range(a, limit + 1):
            values[n] += values[n - a]
    return PartitionTable(parts, values)


class TableCache:
    """Tables keyed by part set, grown by doubling."""

    def __init__(self) -> None:
        self._tables: Dict[PartSet, PartitionTable] = {}

    def table(self, parts: PartSet, limit: int) -> PartitionTable:
        table = self._tables.get(parts)
        if table is None or table.limit < limit:
            grown = limit if table is None else max(limit, 2 * table.limit)
            logger.debug("Building table for %s up to %d", parts, grown)
            table = count_table(parts, grown)
            self._tables[parts] = table
        return table

    def clear(self) -> None:
        self._tables.clear()


_DEFAULT_CACHE = TableCache()


def count_value(parts: PartSet, n: int) -> int:
    if n < 0:
        return 0
    return _DEFAULT_CACHE.table(parts, n)[n]


def sertoz_count(parts: PartSet, n: int) -> int:
    """Closed form for two coprime parts."""
    if parts.size != 2:
        raise WrongArity(f"Two parts required, got {parts}")
    a1, a2 = parts.parts
    if math.gcd(a1, a2) != 1:
        raise NonCoprime(f"Parts of {parts} are not coprime")
    if n < 0:
        raise ValueError("n must be nonnegative")
    a1p = (-n * pow(a1, -1, a2)) % a2 or a2
    a2p = (-n * pow(a2, -1, a1)) % a1 or a1
    value, rem = divmod(n + a1 * a1p + a2 * a2p, a1 * a2)
    assert rem == 0
    return value - 1


def p3_closed(n: int) -> int:
    """Nearest integer to (n+3)^2/12."""
    return ((n + 3) ** 2 + 6) // 12


def p4_closed(n: int) -> int:
    x = Fraction((n + 1) * (n * n + 23 * n + 85), 144) - Fraction(n + 4, 8) * ((n + 1) // 2)
    return math.floor(x + Fraction(1, 2))


def three_part_recurrence(a: int, limit: int) -> List[int]:
    """P_{1,2,a}(0..limit) from P(n) = P(n-a) + n//2 + 1."""
    values: List[int] = []
    for n in range(limit + 1):
        base = n // 2 + 1
        values.append(base + (values[n - a] if n >= a else 0))
    return values


def scale_identity_holds(parts: PartSet, p: int, limit: int) -> bool:
    """P_{1, p*a2, ...}(p*n) == P_{1, a2, ...}(n) for n <= limit."""
    if 1 not in parts.parts:
        raise ValueError(f"{parts} must contain 1")
    scaled = PartSet.of(1, *(p * a for a in parts.parts if a != 1))
    small = _DEFAULT_CACHE.table(parts, limit)
    big = _DEFAULT_CACHE.table(scaled, p * limit)
    return all(big[p * n] == small[n] for n in range(limit + 1))


def trivial_solutions(m: int, n: int) -> List[Tuple[int, int]]:
    """Diagonal solutions (i, i) of P_m(x) = P_n(y)."""
    return [(i, i) for i in range(min(m, n) + 1)]
