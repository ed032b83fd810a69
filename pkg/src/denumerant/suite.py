"""The one-shot verification suite.

Checks are grouped by topic tag. Each returns pass, fail or bounded;
informational checks are reported but do not affect the exit status.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Set, Tuple

from .diopheq import (
    a1a2_construct,
    bounded_curve_points,
    brute_force_search,
    check_known_splittings,
    enumerate_subproblems,
    reduce_to_curve,
    reducibility_sweep,
    residue_subproblem,
    solve_subproblems,
)
from .diopheq.curves import CurveKind
from .diopheq.registry import REGISTRY, Finding, run_entry
from .errors import HypothesisViolated, UnknownSelection, VerificationFailed
from .models.certificates import EquationKind
from .models.config import DenumerantConfig
from .models.report import CheckResult, CheckStatus, SuiteReport
from .partcount import PartSet, TableCache, p3_closed, p4_closed, sertoz_count
from .pellconic import ConicProblem, closed_form_pieces_p3, solve_conic
from .polyratio import RatPoly
from .quasipoly import closed_form_12a, corollary_scan, decompose, printed_closed_form_12a, try_piece
from .services.oracle_service import ValueOracle
from .squarehunt import (
    census_square_pieces,
    p5_obstructed_residues,
    square_times_linear,
    square_value_search,
    summarize_census,
    verify_seven_example,
)

logger = logging.getLogger(__name__)

TOPICS: Dict[str, str] = {
    "closed-forms": "s1",
    "sertoz": "s2",
    "equal-values": "s3",
    "three-part": "s4",
    "squares": "s5",
    "reducibility": "s6",
}

P3 = PartSet.first(3)
P4 = PartSet.first(4)
P5 = PartSet.first(5)

# (x, y) with P_{1,2,3}(x) = P_{1,2,3,4,5}(y), x, y >= 1.
P3P5_SOLUTIONS = [
    (1, 1), (2, 2), (3, 3), (5, 4), (6, 5), (8, 6), (16, 10), (18, 11),
    (26, 14), (45, 20), (174, 45), (217, 51), (457, 77), (468, 78), (701, 97), (10093, 388),
]

CURVE_X_VALUES = [-12, -3, -2, 6, 16, 22, 78, 96, 7926]

P4_PRINTED_PIECES: Dict[Tuple[int, int], RatPoly] = {
    (6, 1): RatPoly([1, 1]) * RatPoly([2, 6, 3]) / 2,
    (6, 3): RatPoly([1, 1]) ** 2 * RatPoly([2, 1]) * 3 / 2,
    (6, 5): RatPoly([1, 1]) * RatPoly([2, 1]) ** 2 * 3 / 2,
    (12, 0): RatPoly([1, 6, 15, 12]),
    (12, 2): RatPoly([2, 12, 21, 12]),
    (12, 4): RatPoly([1, 1]) * RatPoly([5, 15, 12]),
    (12, 6): RatPoly([1, 1]) ** 2 * RatPoly([3, 4]) * 3,
    (12, 8): RatPoly([1, 1]) ** 2 * RatPoly([5, 4]) * 3,
    (12, 10): RatPoly([1, 1]) * RatPoly([23, 33, 12]),
}

CENSUS_TABLE: Dict[Tuple[int, ...], List[int]] = {
    (1, 2, 8, 10, 15): [1, 11, 41, 43, 73, 83, 91, 113],
    (1, 4, 5, 10, 12): [12, 16, 36, 52],
    (1, 4, 8, 9, 12): [1, 13, 19, 25, 37, 43, 49, 61, 67],
    (1, 5, 6, 8, 10): [2, 8, 13, 17, 32, 37, 53, 58, 73, 77, 82, 88, 97, 98, 112, 113],
    (2, 3, 7, 8, 14): [32, 102, 144, 158],
    (2, 4, 5, 6, 10): [12, 16, 17, 21, 36, 41, 52, 57],
    (3, 4, 6, 9, 12): [3, 7, 11, 27, 31, 35],
    (3, 5, 6, 9, 15): [18, 23, 24, 28, 29, 34, 54, 59, 64, 78, 83, 88],
    (4, 5, 6, 12, 15): [27, 51],
    (4, 7, 9, 12, 14): [58, 64, 142, 148, 226, 232],
    (5, 6, 8, 9, 10): [8, 29, 53, 74, 89, 98, 104, 113, 128, 149, 173, 194, 209, 218, 224,
                       233, 248, 269, 293, 314, 329, 338, 344, 353],
    (5, 7, 9, 14, 15): [47, 113, 173, 197, 257, 323, 383, 407, 467, 533, 593, 617],
    (7, 8, 10, 14, 15): [182, 212, 364, 422, 574, 604, 812, 814],
}
CENSUS_TOTAL = 119

P5_OBSTRUCTED = [5, 20, 25, 40]


@dataclass
class SuiteContext:
    config: DenumerantConfig
    oracle: ValueOracle
    cache: TableCache
    extended: bool = False

    @property
    def workers(self) -> int:
        return self.config.workers


@dataclass(kw_only=True)
class SuiteCheck:
    key: str
    topic: str
    description: str
    run: Callable[[SuiteContext], Finding]
    informational: bool = False


# ---------------------------------------------------------------------------
# closed-forms
# ---------------------------------------------------------------------------

def _closed_forms(ctx: SuiteContext) -> Finding:
    finding = Finding()
    limit = 100_000
    t3, t4 = ctx.cache.table(P3, limit), ctx.cache.table(P4, limit)
    for n in range(limit + 1):
        finding.checked += 1
        if p3_closed(n) != t3[n] or p4_closed(n) != t4[n]:
            finding.fail(f"closed form disagrees with the counts at n={n}")
            break
    return finding


def _printed_pieces(ctx: SuiteContext) -> Finding:
    finding = Finding()
    for residue, (piece, printed) in enumerate(zip(decompose(P3).pieces, closed_form_pieces_p3())):
        finding.checked += 1
        if piece != printed:
            finding.fail(f"P_3(6n+{residue}) = {piece.format()}, expected {printed.format()}")
    for (modulus, residue), printed in P4_PRINTED_PIECES.items():
        finding.checked += 1
        piece = try_piece(P4, modulus, residue)
        if piece != printed:
            finding.fail(f"P_4({modulus}n+{residue}) = {piece}, expected {printed.format()}")
    return finding


# ---------------------------------------------------------------------------
# sertoz
# ---------------------------------------------------------------------------

def _coprime_pairs(rng: random.Random, count: int) -> List[Tuple[int, int]]:
    pairs: Set[Tuple[int, int]] = set()
    while len(pairs) < count:
        a1, a2 = sorted(rng.sample(range(1, 40), 2))
        if math.gcd(a1, a2) == 1:
            pairs.add((a1, a2))
    return sorted(pairs)


def _two_part_construction(ctx: SuiteContext) -> Finding:
    finding = Finding()
    rng = random.Random(ctx.config.seed)
    targets = [RatPoly([0, 0, 1]), RatPoly([1, 0, 1]), RatPoly([0, 0, 0, 1])]
    for a1, a2 in _coprime_pairs(rng, 50):
        parts = PartSet.of(a1, a2)
        table = ctx.cache.table(parts, 300)
        for n in range(301):
            if sertoz_count(parts, n) != table[n]:
                finding.fail(f"two-part closed form disagrees for {parts} at n={n}")
                break
        for f in targets:
            m = rng.randint(2, 5)
            try:
                cert = a1a2_construct(parts, f, m, ctx.oracle)
            except (HypothesisViolated, VerificationFailed) as exc:
                finding.fail(str(exc))
                continue
            finding.record(cert.transcript[0])
    return finding


# ---------------------------------------------------------------------------
# three-part
# ---------------------------------------------------------------------------

def _three_part_closed_form(ctx: SuiteContext) -> Finding:
    finding = Finding()
    printed_misses = 0
    for a in range(3, 51):
        finding.checked += 1
        actual = decompose(PartSet.of(1, 2, a)).pieces
        if closed_form_12a(a).pieces != actual:
            finding.fail(f"closed form for {{1,2,{a}}} disagrees with the counts")
        printed = printed_closed_form_12a(a).pieces
        printed_misses += sum(1 for p, q in zip(printed, actual) if p != q)
    if printed_misses:
        finding.erratum(
            f"upper-branch constants subtracting a fail on {printed_misses} residue pieces "
            "for 3 <= a <= 50; subtracting a//2 matches the counts"
        )
    return finding


def _corollary(ctx: SuiteContext) -> Finding:
    finding = Finding()
    for a in range(3, 51, 2):
        finding.checked += 1
        expected = [2 * j for j in range(1, (a - 3) // 2 + 1)]
        found = corollary_scan(a, 4 * a)
        if found != expected:
            finding.fail(f"a={a}: P(n) = P(n+1) at {found}, expected {expected}")
    return finding


# ---------------------------------------------------------------------------
# equal-values
# ---------------------------------------------------------------------------

def _subproblem_counts(ctx: SuiteContext) -> Finding:
    finding = Finding(checked=2)
    for right, expected in ((P4, 54), (P5, 360)):
        count = len(enumerate_subproblems(P3, right))
        if count != expected:
            finding.fail(f"P_3 against P_{right}: {count} subproblems, expected {expected}")
    return finding


def _p3p5_set(ctx: SuiteContext) -> Finding:
    finding = Finding()
    found = [c.point for c in brute_force_search(P3, P5, 20_000, 1_000, cache=ctx.cache)]
    finding.checked = len(found)
    ordered = sorted(found, key=lambda p: p[0])
    if ordered != P3P5_SOLUTIONS:
        finding.fail(f"found {ordered}")
    return finding


def _p3p4_points(ctx: SuiteContext) -> Finding:
    finding = Finding()
    certificates = brute_force_search(P3, P4, 40_000, 3_000, cache=ctx.cache)
    values = {c.point: c.value for c in certificates}
    finding.checked = len(values)
    for point, value in (((49, 27), 225), ((39199, 2637), 128066400)):
        if values.get(point) != value:
            finding.fail(f"{point} with value {value} missing")
    return finding


def _cross_validation(ctx: SuiteContext) -> Finding:
    finding = Finding()
    bound = 5_000
    brute = {c.point for c in brute_force_search(P3, P4, bound, bound, positive=False, cache=ctx.cache)}
    merged = {
        point
        for result in solve_subproblems(P3, P4, bound, bound, workers=ctx.workers)
        for point in result.points
    }
    finding.checked = len(brute)
    if brute != merged:
        finding.fail(f"{len(brute ^ merged)} points differ between the two searches")
    return finding


def _curve(ctx: SuiteContext) -> Finding:
    finding = Finding()
    sub = residue_subproblem(P3, 6, 1, P4, 6, 3)
    assert sub is not None
    model = reduce_to_curve(sub)
    maps = (model.a4, model.a6, model.x_scale, model.x_shift, model.y_scale, model.y_shift)
    if maps != (-108, 1728, 18, 24, 108, 72):
        finding.fail(f"model {model.equation} with maps {maps[2:]}")
        return finding
    points = bounded_curve_points(model, 10_000)
    finding.checked = len(points.points)
    xs = sorted({x for x, _ in points.points})
    if xs != CURVE_X_VALUES:
        finding.fail(f"X values {xs}")
    if any((x, -y) not in points.points for x, y in points.points):
        finding.fail("points are not closed under Y -> -Y")
    return finding


def _round_trips(ctx: SuiteContext) -> Finding:
    finding = Finding()
    for sub in enumerate_subproblems(P3, P4):
        finding.checked += 1
        try:
            reduce_to_curve(sub)
        except AssertionError as exc:
            finding.fail(str(exc))
    return finding


def _quartic_models(ctx: SuiteContext) -> Finding:
    finding = Finding()
    for j in (48, 57):
        sub = residue_subproblem(P3, 6, 3, P5, 60, j)
        assert sub is not None
        model = reduce_to_curve(sub)
        finding.checked += 1
        if model.kind != CurveKind.QUARTIC:
            finding.fail(f"(3,{j}) did not give a quartic model")
        finding.notes.append(f"(3,{j}): {model.equation}")
    return finding


# ---------------------------------------------------------------------------
# squares
# ---------------------------------------------------------------------------

def _p5_squares(ctx: SuiteContext) -> Finding:
    finding = Finding()
    found = square_value_search(P5, 100_000, cache=ctx.cache)
    finding.checked = 100_000
    if found != [(1, 1), (2027, 77129)]:
        finding.fail(f"found {found}")
    return finding


def _census(ctx: SuiteContext) -> Finding:
    finding = Finding()
    records = census_square_pieces(5, 15, workers=ctx.workers)
    summary = summarize_census(5, 15, records)
    finding.checked = summary.rational_count
    table = {row.parts.parts: row.residues for row in summary.rows}
    if summary.integral_count == CENSUS_TOTAL:
        finding.notes.append("count matches with roots in Z[n]")
    elif summary.rational_count == CENSUS_TOTAL:
        finding.notes.append("count matches with roots in Q[n]")
        grouped: Dict[Tuple[int, ...], List[int]] = {}
        for record in records:
            grouped.setdefault(record.parts.parts, []).append(record.residue)
        table = grouped
    else:
        finding.fail(f"{summary.integral_count} integral, {summary.rational_count} rational records")
    if table != CENSUS_TABLE:
        finding.fail("grouped table differs from the expected rows")
    finding.notes.append(f"integral {summary.integral_count}, rational {summary.rational_count}")
    return finding


def _seven(ctx: SuiteContext) -> Finding:
    finding = Finding()
    report = verify_seven_example(oracle=ctx.oracle)
    for step in report.transcript:
        finding.record(step)
    if report.square_ns != [0, 494, 712842]:
        finding.fail(f"square-making n = {report.square_ns}")
    if report.residue_226_squares:
        finding.fail(f"(36n+23)(40n+27) square at {report.residue_226_squares[:5]}")
    return finding


def _square_times_linear_p4(ctx: SuiteContext) -> Finding:
    finding = Finding(checked=1)
    piece = try_piece(P4, 12, 6)
    assert piece is not None
    shape = square_times_linear(piece)
    if shape is None:
        finding.fail("P_4(12n+6) is not square times linear")
        return finding
    c, g, linear = shape
    if (c, g, linear) != (12, RatPoly([1, 1]), RatPoly([Fraction(3, 4), 1])):
        finding.fail(f"shape {c} * ({g.format()})^2 * ({linear.format()})")
    return finding


def _p5_obstructions(ctx: SuiteContext) -> Finding:
    finding = Finding()
    obstructed = p5_obstructed_residues(cache=ctx.cache)
    finding.checked = 60
    finding.notes.append(f"no squares mod 25 on residues {obstructed}")
    if not set(P5_OBSTRUCTED) <= set(obstructed):
        finding.status = CheckStatus.BOUNDED
    return finding


# ---------------------------------------------------------------------------
# reducibility
# ---------------------------------------------------------------------------

def _splittings(ctx: SuiteContext) -> Finding:
    finding = Finding()
    for check in check_known_splittings():
        finding.checked += 1
        if not check.matched:
            finding.fail(f"{check.name}: factors {[f.format() for f in check.case.factors]}")
        if not check.obstructions_confirmed:
            finding.fail(f"{check.name}: mod 5 obstruction not confirmed")
    return finding


def _h2_conic(ctx: SuiteContext) -> Finding:
    finding = Finding()
    problem = ConicProblem(p=(6, 9, 0), q=(10, 12, 0))
    solved = solve_conic(problem, 3, ctx.config.pell_search_bound)
    expected = [(0, 0), (2928, 2268), (11252256, 8715960)]
    finding.checked = len(solved.solutions)
    if solved.solutions != expected:
        finding.fail(f"solutions {solved.solutions}")
    step = ctx.oracle.check(
        EquationKind.EQUAL_VALUES, PartSet.of(1, 2, 3, 4, 6), PartSet.of(1, 2, 4, 5, 10),
        12 * 2928 + 1, 20 * 2268 + 1,
    )
    if not finding.record(step):
        finding.fail("P_{1,2,3,4,6}(35137) != P_{1,2,4,5,10}(45361)")
    return finding


def _extended_sweep(ctx: SuiteContext) -> Finding:
    finding = Finding()
    cases = reducibility_sweep(workers=ctx.workers)
    finding.checked = len(cases)
    for case in cases:
        finding.notes.append(f"{case.subproblem.label}: {len(case.factors)} factors")
    return finding


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------

# Acceptance limits for registry entries run from the suite.
REGISTRY_LIMITS = {
    "p3p4_families": 1000,
    "lemma_12345b": 50,
}

SUITE_CHECKS: List[SuiteCheck] = [
    SuiteCheck(key="closed_forms", topic="closed-forms",
               description="P_3 and P_4 closed forms agree with the counts for n <= 10^5",
               run=_closed_forms),
    SuiteCheck(key="printed_pieces", topic="closed-forms",
               description="Residue pieces of P_3 (mod 6) and P_4 (mod 6 odd, mod 12 even)",
               run=_printed_pieces),
    SuiteCheck(key="two_part_construction", topic="sertoz",
               description="Two-part closed form and x = a1 a2 (f(m) - 1) on 50 coprime pairs",
               run=_two_part_construction),
    SuiteCheck(key="closed_form_12a", topic="three-part",
               description="Pieces of P_{1,2,a} mod 2a for 3 <= a <= 50",
               run=_three_part_closed_form),
    SuiteCheck(key="corollary_12a", topic="three-part",
               description="P(n) = P(n+1) exactly at n = 2j for odd a, n <= 4a",
               run=_corollary),
    SuiteCheck(key="subproblem_counts", topic="equal-values",
               description="54 subproblems for P_3 vs P_4 and 360 for P_3 vs P_5",
               run=_subproblem_counts),
    SuiteCheck(key="p3p5_solutions", topic="equal-values",
               description="All 16 solutions of P_3(x) = P_5(y) in x <= 20000, y <= 1000",
               run=_p3p5_set),
    SuiteCheck(key="p3p4_points", topic="equal-values",
               description="(49, 27) and (39199, 2637) solve P_3(x) = P_4(y)",
               run=_p3p4_points),
    SuiteCheck(key="subproblem_cross_check", topic="equal-values",
               description="Residue-class search equals brute force on P_3 vs P_4, x, y <= 5000",
               run=_cross_validation),
    SuiteCheck(key="curve_1_3", topic="equal-values",
               description="Y^2 = X^3 - 108X + 1728 and its nine X values with |X| <= 10^4",
               run=_curve),
    SuiteCheck(key="curve_round_trips", topic="equal-values",
               description="Curve models of all 54 P_3 vs P_4 subproblems round-trip",
               run=_round_trips),
    SuiteCheck(key="p3p5_quartics", topic="equal-values",
               description="Quartic models for P_3(6m+3) = P_5(60n+j), j in {48, 57}",
               run=_quartic_models, informational=True),
    SuiteCheck(key="p5_squares", topic="squares",
               description="y^2 = P_5(x), x <= 10^5: exactly (1, 1) and (2027, 77129)",
               run=_p5_squares),
    SuiteCheck(key="square_census", topic="squares",
               description="119 square pieces among 5-subsets of {1..15}",
               run=_census),
    SuiteCheck(key="seven_parts", topic="squares",
               description="P_{1,2,4,5,8,9,10}(360n + r) factorisations and square values",
               run=_seven),
    SuiteCheck(key="square_times_linear_p4", topic="squares",
               description="P_4(12n+6) = 3(n+1)^2(4n+3)",
               run=_square_times_linear_p4),
    SuiteCheck(key="p5_mod_25", topic="squares",
               description="Residues mod 60 with no square values of P_5 mod 25",
               run=_p5_obstructions, informational=True),
    SuiteCheck(key="known_splittings", topic="reducibility",
               description="Three reducible subproblems and their mod 5 obstructions",
               run=_splittings),
    SuiteCheck(key="h2_conic", topic="reducibility",
               description="Smallest solutions of 6m^2 + 9m = 10n^2 + 12n and the values they give",
               run=_h2_conic),
]

EXTENDED_CHECK = SuiteCheck(
    key="reducibility_sweep", topic="reducibility",
    description="Reducible subproblems over pairs of 5-element sets up to 10",
    run=_extended_sweep, informational=True,
)


def resolve_selection(selection: Optional[Iterable[str]]) -> List[str]:
    """Topic names for tags or aliases; everything when nothing is selected."""
    if not selection:
        return list(TOPICS)
    aliases = {alias: topic for topic, alias in TOPICS.items()}
    resolved = []
    for tag in selection:
        topic = tag if tag in TOPICS else aliases.get(tag)
        if topic is None:
            raise UnknownSelection(f"Unknown tag {tag!r}; known: {sorted(TOPICS)}")
        if topic not in resolved:
            resolved.append(topic)
    return resolved


def _to_result(check: SuiteCheck, finding: Finding) -> CheckResult:
    return CheckResult(
        key=check.key,
        topic=check.topic,
        description=check.description,
        status=finding.status,
        checked=finding.checked,
        informational=check.informational,
        errata=finding.errata,
        notes=finding.notes,
        transcript=finding.transcript,
    )


def run_suite(
    selection: Optional[Iterable[str]] = None,
    config: Optional[DenumerantConfig] = None,
    extended: bool = False,
) -> SuiteReport:
    topics = resolve_selection(selection)
    config = config or DenumerantConfig()
    cache = TableCache()
    ctx = SuiteContext(
        config=config,
        oracle=ValueOracle(dp_budget=config.dp_budget, cache=cache),
        cache=cache,
        extended=extended,
    )
    checks = [c for c in SUITE_CHECKS if c.topic in topics]
    if extended and "reducibility" in topics:
        checks.append(EXTENDED_CHECK)

    report = SuiteReport(selection=topics)
    for check in checks:
        logger.info("Running %s", check.key)
        report.results.append(_to_result(check, check.run(ctx)))
    for entry in REGISTRY:
        if entry.topic in topics:
            report.results.append(
                run_entry(entry, REGISTRY_LIMITS.get(entry.key), ctx.oracle)
            )
    report.results.sort(key=lambda r: (list(TOPICS).index(r.topic), r.key))
    return report
