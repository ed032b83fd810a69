"""Command handlers behind the CLI.

Each handle_*() function holds the logic for one subcommand and returns a
response model; rendering and exit codes are left to the caller.
"""

import logging
from typing import Dict, List, Optional, Tuple

from .diopheq import (
    REGISTRY,
    bounded_curve_points,
    brute_force_search,
    detect_family,
    enumerate_subproblems,
    pull_back_points,
    reduce_to_curve,
    verify_family_registry,
)
from .errors import DegreeUnsupported
from .models.certificates import SearchStatus
from .models.config import DenumerantConfig
from .models.report import CheckStatus
from .models.responses import (
    ConicResponse,
    CountResponse,
    CountRow,
    CurveSummary,
    DecomposeResponse,
    FamiliesResponse,
    HuntSquaresResponse,
    PellResponse,
    PieceRow,
    SolveResponse,
    SquareRow,
    VerifyResponse,
)
from .partcount import PartSet, TableCache
from .pellconic import ConicProblem, family_from_theorem, pell_take, solve_conic
from .polyratio import RatPoly
from .quasipoly import coarse_decomposition, decompose, try_piece
from .services.oracle_service import ValueOracle
from .squarehunt import (
    census_square_pieces,
    census_square_times_linear,
    square_value_search,
    summarize_census,
)
from .suite import run_suite

logger = logging.getLogger(__name__)


def handle_count(parts: PartSet, start: int, stop: int) -> CountResponse:
    if start < 0 or stop < start:
        return CountResponse(success=False, error=f"Invalid range {start}..{stop}")
    table = TableCache().table(parts, stop)
    rows = [CountRow(n=n, value=table[n]) for n in range(start, stop + 1)]
    return CountResponse(parts=parts, rows=rows)


def _piece_row(modulus: int, residue: int, piece: RatPoly) -> PieceRow:
    return PieceRow(
        modulus=modulus, residue=residue, piece=piece, text=piece.format("n")
    )


def handle_decompose(
    parts: PartSet,
    modulus: Optional[int] = None,
    residue: Optional[int] = None,
    coarse: bool = False,
) -> DecomposeResponse:
    if modulus is not None and residue is not None:
        piece = try_piece(parts, modulus, residue)
        if piece is None:
            return DecomposeResponse(
                success=False,
                error=f"P_{parts}({modulus}n+{residue}) is not a polynomial",
            )
        row = _piece_row(modulus, residue, piece)
        return DecomposeResponse(parts=parts, modulus=modulus, pieces=[row])
    if coarse:
        classes = coarse_decomposition(parts)
        rows = [_piece_row(c.modulus, c.residue, c.piece) for c in classes]
        return DecomposeResponse(parts=parts, modulus=parts.lcm, pieces=rows)
    quasi = decompose(parts)
    rows = [_piece_row(quasi.modulus, r, p) for r, p in enumerate(quasi.pieces)]
    return DecomposeResponse(parts=parts, modulus=quasi.modulus, pieces=rows)


def handle_pell(d: int, count: int) -> PellResponse:
    return PellResponse(d=d, solutions=pell_take(d, count))


def handle_conic(
    p: Tuple[int, int, int], q: Tuple[int, int, int], count: int, config: DenumerantConfig
) -> ConicResponse:
    problem = ConicProblem(p=p, q=q)
    solved = solve_conic(problem, count, config.pell_search_bound)
    return ConicResponse(
        equation=str(problem),
        solutions=solved.solutions,
        d=solved.d,
        n_value=solved.n_value,
        automorphism=solved.automorphism,
        status=solved.status,
    )


def handle_solve(
    left: PartSet,
    right: PartSet,
    x_max: int,
    y_max: int,
    config: DenumerantConfig,
    families: bool = False,
    curves: bool = False,
    x_bound: Optional[int] = None,
) -> SolveResponse:
    response = SolveResponse(equation=f"P_{left}(x) = P_{right}(y)")
    response.certificates = brute_force_search(
        left, right, x_max, y_max, budget=config.search_budget
    )
    if not (families or curves):
        return response

    subproblems = enumerate_subproblems(left, right)
    response.subproblems = len(subproblems)
    oracle = ValueOracle(dp_budget=config.dp_budget)
    for sub in subproblems:
        if families:
            found = detect_family(sub, oracle)
            if found:
                response.families.extend(found)
        if curves and sub.p.degree == 2 and sub.q.degree in (3, 4):
            try:
                model = reduce_to_curve(sub)
            except DegreeUnsupported:
                continue
            points = bounded_curve_points(model, x_bound or config.curve_x_bound)
            pulled = [sub.point(m, n) for m, n in pull_back_points(points)]
            response.curves.append(CurveSummary(
                subproblem=sub.label,
                equation=model.equation,
                x_bound=points.x_bound,
                points=len(points.points),
                pulled_back=pulled,
                status=points.status,
            ))
    response.inconclusive = any(c.status == SearchStatus.BOUNDED for c in response.curves)
    return response


def handle_hunt_squares(
    k: Optional[int] = None,
    max_part: Optional[int] = None,
    parts: Optional[PartSet] = None,
    x_max: Optional[int] = None,
    times_linear: bool = False,
    workers: int = 1,
    check_bound: int = 10_000,
) -> HuntSquaresResponse:
    if parts is not None:
        if x_max is None:
            return HuntSquaresResponse(success=False, error="--xmax is required with --parts")
        return HuntSquaresResponse(points=square_value_search(parts, x_max))
    if k is None or max_part is None:
        return HuntSquaresResponse(
            success=False, error="Either --parts or --k and --max-part are required"
        )
    if times_linear:
        shapes = census_square_times_linear(k, max_part, workers, check_bound)
        return HuntSquaresResponse(shapes=[s.model_dump(mode="json") for s in shapes])
    records = census_square_pieces(k, max_part, workers)
    summary = summarize_census(k, max_part, records)
    rows = [
        SquareRow(
            parts=r.parts, modulus=r.modulus, residue=r.residue,
            root=r.root.to_strings(), integral=r.integral,
        )
        for r in records
    ]
    return HuntSquaresResponse(
        integral_count=summary.integral_count,
        rational_count=summary.rational_count,
        rows=rows,
    )


def handle_families(
    name: Optional[str] = None,
    params: Optional[Dict[str, int]] = None,
    take: int = 10,
    pattern: Optional[str] = None,
    limit: Optional[int] = None,
) -> FamiliesResponse:
    if name is not None:
        result = family_from_theorem(name, params, take)
        return FamiliesResponse(family=result.model_dump(mode="json"))
    # One limit for every selected entry.
    limits = {entry.key: limit for entry in REGISTRY} if limit is not None else {}
    results = verify_family_registry(pattern or "*", limits)
    failed = [r.key for r in results if r.status == CheckStatus.FAIL and not r.informational]
    return FamiliesResponse(
        success=not failed,
        error=f"Failed: {', '.join(failed)}" if failed else None,
        results=results,
    )


def handle_verify(
    selection: Optional[List[str]], config: DenumerantConfig, extended: bool = False
) -> VerifyResponse:
    report = run_suite(selection, config, extended)
    return VerifyResponse(
        success=report.exit_code == 0,
        selection=report.selection,
        exit_code=report.exit_code,
        results=report.results,
    )


__all__ = [
    "handle_conic",
    "handle_count",
    "handle_decompose",
    "handle_families",
    "handle_hunt_squares",
    "handle_pell",
    "handle_solve",
    "handle_verify",
]
