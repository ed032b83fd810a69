"""Pell equations, equal-quadratic conics and the infinite families they give."""

from __future__ import annotations

import logging
from fractions import Fraction
from math import isqrt
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field

from .errors import (
    HypothesisViolated,
    NoSolutionFound,
    NotHyperbolic,
    SquareD,
    UnknownSelection,
    VerificationFailed,
)
from .models.certificates import EquationKind, SearchStatus, VerificationStep
from .partcount import PartSet
from .polyratio import BigInt, RatPoly
from .services.oracle_service import ValueOracle

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BOUND = 1_000_000


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


# ---------------------------------------------------------------------------
# Pell equations u^2 - D v^2 = 1
# ---------------------------------------------------------------------------

def pell_fundamental(d: int) -> Tuple[int, int]:
    """Minimal positive solution via the continued fraction of sqrt(D)."""
    if d < 2:
        raise ValueError(f"D must be at least 2, got {d}")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise SquareD(f"D={d} is a perfect square")
    m, den, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    while p * p - d * q * q != 1:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q


class PellStream:
    """Iterator over the positive solutions of u^2 - D v^2 = 1, increasing."""

    def __init__(self, d: int):
        self.d = d
        self.fundamental = pell_fundamental(d)
        self._state: Optional[Tuple[int, int]] = None

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return self

    def __next__(self) -> Tuple[int, int]:
        u1, v1 = self.fundamental
        if self._state is None:
            self._state = (u1, v1)
        else:
            u, v = self._state
            self._state = (u1 * u + self.d * v1 * v, u1 * v + v1 * u)
        return self._state


def pell_stream(d: int) -> PellStream:
    return PellStream(d)


def pell_take(d: int, k: int) -> List[Tuple[int, int]]:
    if k < 1:
        raise ValueError("k must be positive")
    stream = PellStream(d)
    return [next(stream) for _ in range(k)]


# ---------------------------------------------------------------------------
# Conics p(m) = q(n)
# ---------------------------------------------------------------------------

class ConicProblem(BaseModel):
    """p(m) = q(n) with integer quadratics given high degree first."""
    p: Tuple[int, int, int] = Field(..., description="(a1, b1, c1): a1 m^2 + b1 m + c1")
    q: Tuple[int, int, int] = Field(..., description="(a2, b2, c2): a2 n^2 + b2 n + c2")

    def holds(self, m: int, n: int) -> bool:
        a1, b1, c1 = self.p
        a2, b2, c2 = self.q
        return a1 * m * m + b1 * m + c1 == a2 * n * n + b2 * n + c2

    def __str__(self) -> str:
        left = RatPoly(reversed(self.p)).format("m")
        right = RatPoly(reversed(self.q)).format("n")
        return f"{left} = {right}"


class ConicSolution(BaseModel):
    problem: ConicProblem
    solutions: List[Tuple[BigInt, BigInt]] = Field(..., description="(m, n), ascending")
    d: int = Field(..., description="D of X^2 - D Y^2 = N")
    n_value: BigInt = Field(..., description="N of X^2 - D Y^2 = N")
    fundamental: Tuple[BigInt, BigInt] = Field(..., description="Fundamental unit of D")
    automorphism: Tuple[BigInt, BigInt] = Field(..., description="Unit power preserving integrality")
    status: SearchStatus

    def apply_automorphism(self, m: int, n: int) -> Optional[Tuple[int, int]]:
        """Image of a solution under the declared automorphism."""
        a1, b1, _ = self.problem.p
        a2, b2, _ = self.problem.q
        x, y = a2 * (2 * a1 * m + b1), 2 * a2 * n + b2
        u, v = self.automorphism
        x, y = u * x + self.d * v * y, v * x + u * y
        return _back_map(self.problem, x, y)


def conic_from_pieces(p: RatPoly, q: RatPoly) -> ConicProblem:
    """Clear denominators of p(m) = q(n) for two quadratic pieces."""
    if p.degree != 2 or q.degree != 2:
        raise NotHyperbolic("Both sides must be quadratic")
    scale = p.denominator_lcm() * q.denominator_lcm()
    pc = [int(c * scale) for c in reversed(p.coeffs)]
    qc = [int(c * scale) for c in reversed(q.coeffs)]
    return ConicProblem(p=(pc[0], pc[1], pc[2]), q=(qc[0], qc[1], qc[2]))


def _back_map(problem: ConicProblem, x: int, y: int) -> Optional[Tuple[int, int]]:
    a1, b1, _ = problem.p
    a2, b2, _ = problem.q
    if x % a2:
        return None
    mu = x // a2 - b1
    nu = y - b2
    if mu % (2 * a1) or nu % (2 * a2):
        return None
    m, n = mu // (2 * a1), nu // (2 * a2)
    if m < 0 or n < 0:
        return None
    return m, n


def _integrality_period(unit: Tuple[int, int], d: int, modulus: int) -> int:
    """Smallest e with unit^e congruent to 1 modulo the given modulus."""
    u1, v1 = unit
    u, v = u1 % modulus, v1 % modulus
    e = 1
    while (u, v) != (1 % modulus, 0):
        u, v = (u1 * u + d * v1 * v) % modulus, (u1 * v + v1 * u) % modulus
        e += 1
    return e


def _unit_power(unit: Tuple[int, int], d: int, e: int) -> Tuple[int, int]:
    u1, v1 = unit
    u, v = 1, 0
    for _ in range(e):
        u, v = u1 * u + d * v1 * v, u1 * v + v1 * u
    return u, v


def solve_conic(
    problem: ConicProblem, count: int = 3, search_bound: int = DEFAULT_SEARCH_BOUND
) -> ConicSolution:
    """The smallest nonnegative solutions of p(m) = q(n).

    Completing squares gives X^2 - D Y^2 = N with X = a2(2 a1 m + b1),
    Y = 2 a2 n + b2, D = a1 a2 and N = a2 (a2 disc(p) - a1 disc(q)).
    Fundamental solutions come from Nagell's bounds on Y, capped by
    ``search_bound``; the orbits under the unit group are then walked.
    """
    a1, b1, c1 = problem.p
    a2, b2, c2 = problem.q
    if a1 == 0 or a2 == 0:
        raise NotHyperbolic(f"{problem} is not quadratic on both sides")
    d = a1 * a2
    if d <= 0 or _is_square(d):
        raise NotHyperbolic(f"D={d} for {problem}: not a generalized Pell equation")
    n_value = a2 * (a2 * (b1 * b1 - 4 * a1 * c1) - a1 * (b2 * b2 - 4 * a2 * c2))
    unit = pell_fundamental(d)
    period = _integrality_period(unit, d, 2 * abs(a1 * a2))
    automorphism = _unit_power(unit, d, period)

    if n_value == 0:
        found = _back_map(problem, 0, 0)
        if found is None:
            raise NoSolutionFound(f"No nonnegative solution of {problem}")
        return ConicSolution(
            problem=problem, solutions=[found], d=d, n_value=0, fundamental=unit,
            automorphism=automorphism, status=SearchStatus.COMPLETE,
        )

    u1, v1 = unit
    if n_value > 0:
        nagell = Fraction(n_value * v1 * v1, 2 * (u1 + 1))
    else:
        nagell = Fraction(-n_value * v1 * v1, 2 * (u1 - 1))
    y_bound = isqrt(int(nagell))
    status = SearchStatus.COMPLETE
    if y_bound > search_bound:
        y_bound = search_bound
        status = SearchStatus.BOUNDED
        logger.info("Fundamental domain of %s truncated at |Y| <= %d", problem, search_bound)

    bases: List[Tuple[int, int]] = []
    for y0 in range(0, y_bound + 1):
        rhs = n_value + d * y0 * y0
        if _is_square(rhs):
            x0 = isqrt(rhs)
            bases.extend({(x0, y0), (-x0, y0), (x0, -y0), (-x0, -y0)})
    logger.debug("%s: D=%d N=%d, %d base solutions", problem, d, n_value, len(bases))

    found_set: Dict[Tuple[int, int], Tuple[int, int]] = {}
    level = bases
    max_levels = period * (count + 2) + 2
    for depth in range(max_levels + 1):
        for x, y in level:
            for sx, sy in ((x, y), (-x, y), (x, -y), (-x, -y)):
                hit = _back_map(problem, sx, sy)
                if hit is not None:
                    found_set[hit] = hit
        ranked = sorted(found_set.values())
        if len(ranked) >= count and depth >= period:
            # Y grows along each orbit, so nothing smaller remains once the
            # whole level exceeds the count-th solution.
            kth = ranked[count - 1]
            kth_y = abs(2 * a2 * kth[1] + b2)
            if level and min(abs(y) for _, y in level) > kth_y:
                break
        level = [(u1 * x + d * v1 * y, v1 * x + u1 * y) for x, y in level]

    if not found_set:
        raise NoSolutionFound(f"No nonnegative solution of {problem} within the search")
    solutions = sorted(found_set.values())[:count]
    for m, n in solutions:
        assert problem.holds(m, n)
    return ConicSolution(
        problem=problem, solutions=solutions, d=d, n_value=n_value, fundamental=unit,
        automorphism=automorphism, status=status,
    )


# ---------------------------------------------------------------------------
# Square and equal-value families
# ---------------------------------------------------------------------------

class FamilyResult(BaseModel):
    """Verified points (x, y) of a registered family."""
    key: str
    equation: str
    equation_kind: EquationKind
    left: PartSet
    right: Optional[PartSet] = None
    parameters: Dict[str, int] = Field(default_factory=dict)
    points: List[Tuple[BigInt, BigInt]] = Field(default_factory=list)
    transcript: List[VerificationStep] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)


_Candidates = Tuple[str, EquationKind, PartSet, Optional[PartSet], List[Tuple[int, int]], List[str]]


def _sq_p3_i4(params: Dict[str, int], take: int) -> _Candidates:
    # v^2 - 3u^2 = 1 gives P_3(6n + 4) = (n+1)(3n+4) = (uv)^2 at n = u^2 - 1.
    points = []
    for v, u in pell_take(3, take):
        n = u * u - 1
        points.append((6 * n + 4, u * v))
    return "y^2 = P_{1,2,3}(6n+4)", EquationKind.SQUARE, PartSet.first(3), None, points, []


def _sq_p3_conic(params: Dict[str, int], take: int) -> _Candidates:
    residue = params.get("residue", 4)
    if not 0 <= residue < 6:
        raise HypothesisViolated(f"Residue {residue} outside 0..5")
    piece = closed_form_pieces_p3()[residue]
    problem = conic_from_pieces(piece, RatPoly([0, 0, 1]))
    notes: List[str] = []
    try:
        solved = solve_conic(problem, take)
        points = [(6 * n + residue, y) for n, y in solved.solutions]
    except NoSolutionFound:
        points = []
        notes.append(f"no square values on residue {residue}")
    return (f"y^2 = P_{{1,2,3}}(6n+{residue})", EquationKind.SQUARE, PartSet.first(3),
            None, points, notes)


def _sq_p4_i3(params: Dict[str, int], take: int) -> _Candidates:
    points = []
    for u in range(1, take + 1):
        points.append((36 * u * u - 9, 3 * u * (6 * u * u - 1)))
    return "y^2 = P_{1,2,3,4}(6n+3)", EquationKind.SQUARE, PartSet.first(4), None, points, []


def _sq_p4_i5(params: Dict[str, int], take: int) -> _Candidates:
    points = []
    for w in range(1, take + 1):
        points.append((36 * w * w - 1, 3 * w * (6 * w * w + 1)))
    return "y^2 = P_{1,2,3,4}(6n+5)", EquationKind.SQUARE, PartSet.first(4), None, points, []


def _sq_p4_12n6(params: Dict[str, int], take: int) -> _Candidates:
    points = []
    for k in range(take):
        w = 2 * k + 1
        n = (3 * w * w - 3) // 4
        points.append((12 * n + 6, 3 * w * (n + 1)))
    return "y^2 = P_{1,2,3,4}(12n+6)", EquationKind.SQUARE, PartSet.first(4), None, points, []


def _sq_12a_pell(params: Dict[str, int], take: int) -> _Candidates:
    a = _require(params, "a")
    if a < 3 or _is_square(a):
        raise HypothesisViolated(f"a={a} must be a nonsquare at least 3")
    c = a // 2
    notes = ["y = (c+2)uv - 2u^2 + 1; the form without the constant 1 fails the exact check"]
    found = set()
    for u0, v0 in pell_take(a, take):
        for u, v in ((u0, v0), (-u0, v0), (u0, -v0), (-u0, -v0)):
            n = (c + 2) * v * v - 2 * u * v
            y = (c + 2) * u * v - 2 * u * u + 1
            if n >= 0:
                found.add((2 * a * n, abs(y)))
    return (f"y^2 = P_{{1,2,{a}}}({2 * a}n)", EquationKind.SQUARE, PartSet.of(1, 2, a),
            None, sorted(found), notes)


def _sq_12a_even_square(params: Dict[str, int], take: int) -> _Candidates:
    t = _require(params, "t")
    if t < 1:
        raise HypothesisViolated("t must be positive")
    a = 4 * t * t
    points = [(8 * t * t * n + 2 * t * t - 2, t * (2 * n + 1)) for n in range(take)]
    return (f"y^2 = P_{{1,2,{a}}}(x)", EquationKind.SQUARE, PartSet.of(1, 2, a),
            None, points, [])


def _sq_12a_odd_square(params: Dict[str, int], take: int) -> _Candidates:
    t = _require(params, "t")
    if t < 1:
        raise HypothesisViolated("t must be positive")
    a = (2 * t + 1) ** 2
    notes = [f"uses c = 2t(t+1) = {2 * t * (t + 1)}, the value consistent with a = (2t+1)^2"]
    points = [(2 * a * n + 2 * t * t - 2, (2 * t + 1) * n + t) for n in range(take)]
    return (f"y^2 = P_{{1,2,{a}}}(x)", EquationKind.SQUARE, PartSet.of(1, 2, a),
            None, points, notes)


def _pell_12a12b(params: Dict[str, int], take: int) -> _Candidates:
    a, b = _require(params, "a"), _require(params, "b")
    if a % 2 or b % 2 or a < 4 or b < 4 or a == b:
        raise HypothesisViolated(f"a={a}, b={b} must be distinct even integers >= 4")
    s, t = a // 2, b // 2
    problem = ConicProblem(p=(2 * s, s + 2, 0), q=(2 * t, t + 2, 0))
    if _is_square(problem.p[0] * problem.q[0]):
        raise HypothesisViolated(f"4st={4 * s * t} is a square")
    solved = solve_conic(problem, take + 1)
    points = [(2 * a * n, 2 * b * m) for n, m in solved.solutions if (n, m) != (0, 0)][:take]
    notes = []
    if printed_12a12b_fails(s, t):
        notes.append("closed form m=(s+2)/2 uv - (t+2)/2 v^2 over v^2 - s u^2 = 1 fails; "
                     "solutions come from the conic instead")
    return (f"P_{{1,2,{a}}}(x) = P_{{1,2,{b}}}(y)", EquationKind.EQUAL_VALUES,
            PartSet.of(1, 2, a), PartSet.of(1, 2, b), points, notes)


def printed_12a12b_fails(s: int, t: int, take: int = 3) -> bool:
    """Whether the Pell closed form for 2s n^2 + (s+2) n = 2t m^2 + (t+2) m misses."""
    if _is_square(s) or (s + 2) % 2 or (t + 2) % 2:
        return True
    for v, u in pell_take(s, take):
        m = (s + 2) // 2 * u * v - (t + 2) // 2 * v * v
        n = (s + 2) // 2 * u * u - (t + 2) // 2 * u * v
        if 2 * s * n * n + (s + 2) * n != 2 * t * m * m + (t + 2) * m:
            return True
    return False


def _require(params: Dict[str, int], name: str) -> int:
    if name not in params:
        raise HypothesisViolated(f"Missing parameter {name!r}")
    return int(params[name])


def closed_form_pieces_p3() -> List[RatPoly]:
    """P_{1,2,3}(6n + i), i = 0..5."""
    return [
        RatPoly([1, 3, 3]),
        RatPoly([1, 4, 3]),
        RatPoly([2, 5, 3]),
        RatPoly([3, 6, 3]),
        RatPoly([4, 7, 3]),
        RatPoly([5, 8, 3]),
    ]


FAMILY_BUILDERS: Dict[str, Callable[[Dict[str, int], int], _Candidates]] = {
    "sq_P3_i4": _sq_p3_i4,
    "sq_P3_conic": _sq_p3_conic,
    "sq_P4_i3": _sq_p4_i3,
    "sq_P4_i5": _sq_p4_i5,
    "sq_P4_12n6": _sq_p4_12n6,
    "sq_12a_pell": _sq_12a_pell,
    "sq_12a_even_square": _sq_12a_even_square,
    "sq_12a_odd_square": _sq_12a_odd_square,
    "pell_12a12b": _pell_12a12b,
}


def family_from_theorem(
    name: str,
    params: Optional[Dict[str, int]] = None,
    take: int = 10,
    oracle: Optional[ValueOracle] = None,
) -> FamilyResult:
    """Generate a registered family and verify every point exactly."""
    builder = FAMILY_BUILDERS.get(name)
    if builder is None:
        raise UnknownSelection(f"Unknown family {name!r}; known: {sorted(FAMILY_BUILDERS)}")
    params = dict(params or {})
    equation, kind, left, right, points, notes = builder(params, take)
    oracle = oracle or ValueOracle()
    result = FamilyResult(
        key=name, equation=equation, equation_kind=kind, left=left, right=right,
        parameters=params, notes=notes,
    )
    for x, y in points:
        step = oracle.check(kind, left, right, x, y)
        result.transcript.append(step)
        if not step.ok:
            raise VerificationFailed(f"{name} {params}: ({x}, {y}) fails {equation}")
        result.points.append((x, y))
    logger.info("%s %s: %d points verified", name, params, len(result.points))
    return result
