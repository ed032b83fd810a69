import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from . import __version__
from .errors import DenumerantError, UnknownSelection
from .models.config import DenumerantConfig, OutputFormat
from .models.report import render
from .partcount import PartSet
from .services.config_service import ConfigurationError, ConfigurationService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64


class _UsageParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with EX_USAGE."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# Argument types
# ---------------------------------------------------------------------------

def _part_set(text: str) -> PartSet:
    try:
        return PartSet.parse(text)
    except (DenumerantError, ValueError) as e:
        raise argparse.ArgumentTypeError(str(e))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _quadratic(text: str) -> Tuple[int, int, int]:
    try:
        a, b, c = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b,c', got {text!r}")
    return a, b, c


def _param(text: str) -> Tuple[str, int]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    return name.strip(), int(value)


# ---------------------------------------------------------------------------
# CLI command registration and dispatch
# ---------------------------------------------------------------------------

def register_cli_commands(subparsers) -> None:  # type: ignore[no-untyped-def]
    """Register all CLI command subparsers."""

    count_parser = subparsers.add_parser("count", help="Tabulate P_A(n)")
    count_parser.add_argument("--set", dest="parts", type=_part_set, required=True, help="Part set, e.g. 1,2,3")
    count_parser.add_argument("--upto", type=_nonnegative, required=True, help="Last n")
    count_parser.add_argument("--from", dest="start", type=_nonnegative, default=0, help="First n")

    dec_parser = subparsers.add_parser("decompose", help="Quasi-polynomial pieces of P_A")
    dec_parser.add_argument("--set", dest="parts", type=_part_set, required=True)
    dec_parser.add_argument("--modulus", type=_positive, default=None, help="Modulus M (with --residue)")
    dec_parser.add_argument("--residue", type=_nonnegative, default=None, help="Residue r of P_A(Mn+r)")
    dec_parser.add_argument("--coarse", action="store_true", default=False,
                            help="Coarsest certified cover of the residues")

    pell_parser = subparsers.add_parser("pell", help="Solutions of u^2 - D v^2 = 1")
    pell_parser.add_argument("--d", type=_positive, required=True, help="Nonsquare D")
    pell_parser.add_argument("--take", type=_positive, default=5)

    conic_parser = subparsers.add_parser("conic", help="Solve p(m) = q(n) for integer quadratics")
    conic_parser.add_argument("--p", type=_quadratic, required=True, help="a,b,c of a m^2 + b m + c")
    conic_parser.add_argument("--q", type=_quadratic, required=True, help="a,b,c of a n^2 + b n + c")
    conic_parser.add_argument("--take", type=_positive, default=3)

    solve_parser = subparsers.add_parser("solve", help="Solve P_A(x) = P_B(y)")
    solve_parser.add_argument("--a", dest="left", type=_part_set, required=True)
    solve_parser.add_argument("--b", dest="right", type=_part_set, required=True)
    solve_parser.add_argument("--xmax", type=_nonnegative, default=1000)
    solve_parser.add_argument("--ymax", type=_nonnegative, default=1000)
    solve_parser.add_argument("--families", action="store_true", default=False,
                              help="Detect polynomial families per residue subproblem")
    solve_parser.add_argument("--curves", action="store_true", default=False,
                              help="Reduce (2,3) and (2,4) subproblems to curves")
    solve_parser.add_argument("--xbound", type=_positive, default=None, help="|X| bound for curve points")

    sq_parser = subparsers.add_parser("hunt-squares", help="Square values and square pieces of P_A")
    sq_parser.add_argument("--k", type=_positive, default=None, help="Set size for the census")
    sq_parser.add_argument("--max-part", type=_positive, default=None, help="Largest part for the census")
    sq_parser.add_argument("--parts", type=_part_set, default=None, help="Search y^2 = P_A(x) directly")
    sq_parser.add_argument("--xmax", type=_positive, default=None)
    sq_parser.add_argument("--times-linear", action="store_true", default=False,
                           help="Census of c*g(n)^2*(alpha n + beta) pieces instead")

    fam_parser = subparsers.add_parser("families", help="Generate a family or check the family registry")
    fam_parser.add_argument("--name", default=None, help="Family key, e.g. sq_P4_i3")
    fam_parser.add_argument("--param", type=_param, action="append", default=[],
                            help="Family parameter NAME=VALUE (repeatable)")
    fam_parser.add_argument("--take", type=_positive, default=10)
    fam_parser.add_argument("--select", default=None, help="Registry key pattern, e.g. 'pa4_*'")
    fam_parser.add_argument("--limit", type=_positive, default=None, help="Parameter range per entry")

    ver_parser = subparsers.add_parser("verify", help="Run the acceptance suite")
    ver_parser.add_argument("--select", action="append", default=None,
                            help="Topic tag, e.g. squares or s5 (repeatable; default all)")
    ver_parser.add_argument("--extended", action="store_true", default=False,
                            help="Include the five-part reducibility sweep")


def _render_response(title: str, response: BaseModel, fmt: OutputFormat,
                     rows: Optional[Sequence[Dict[str, Any]]] = None) -> str:
    """Render a response model for CLI output."""
    return render(title, response, fmt, rows)


def _fail(response: Any) -> int:
    print(f"error: {response.error}", file=sys.stderr)
    return EXIT_FAILURE


def run_cli_command(command: str, args: argparse.Namespace, config: DenumerantConfig) -> int:
    """Dispatch a CLI command to its handler, print it, and return the exit code."""
    from .commands import (
        handle_conic,
        handle_count,
        handle_decompose,
        handle_families,
        handle_hunt_squares,
        handle_pell,
        handle_solve,
        handle_verify,
    )

    fmt = config.output_format

    if command == "count":
        response = handle_count(args.parts, args.start, args.upto)
        if not response.success:
            return _fail(response)
        rows = [{"n": r.n, "value": r.value} for r in response.rows]
        print(_render_response(f"P_{args.parts}(n)", response, fmt, rows))

    elif command == "decompose":
        response = handle_decompose(args.parts, args.modulus, args.residue, args.coarse)
        if not response.success:
            return _fail(response)
        rows = [
            {"modulus": r.modulus, "residue": r.residue, "piece": r.piece.to_strings()}
            for r in response.pieces
        ]
        print(_render_response(f"Pieces of P_{args.parts}", response, fmt, rows))

    elif command == "pell":
        response = handle_pell(args.d, args.take)
        rows = [{"u": u, "v": v} for u, v in response.solutions]
        print(_render_response(f"u^2 - {args.d} v^2 = 1", response, fmt, rows))

    elif command == "conic":
        response = handle_conic(args.p, args.q, args.take, config)
        rows = [{"m": m, "n": n} for m, n in response.solutions]
        print(_render_response("Conic", response, fmt, rows))

    elif command == "solve":
        response = handle_solve(
            args.left, args.right, args.xmax, args.ymax, config,
            families=args.families, curves=args.curves, x_bound=args.xbound,
        )
        rows = [
            {"x": c.point[0], "y": c.point[1], "value": c.value}
            for c in response.certificates if c.point is not None
        ]
        print(_render_response(response.equation or "Solve", response, fmt, rows))
        if response.inconclusive:
            return EXIT_INCONCLUSIVE

    elif command == "hunt-squares":
        response = handle_hunt_squares(
            k=args.k, max_part=args.max_part, parts=args.parts, x_max=args.xmax,
            times_linear=args.times_linear, workers=config.workers,
            check_bound=config.square_check_bound,
        )
        if not response.success:
            return _fail(response)
        if response.points:
            table = [{"x": x, "y": y} for x, y in response.points]
        else:
            table = [
                {"parts": r.parts.label, "L": r.modulus, "i": r.residue, "root-coefficients": r.root}
                for r in response.rows
            ]
        print(_render_response("Square values", response, fmt, table))

    elif command == "families":
        response = handle_families(
            name=args.name, params=dict(args.param), take=args.take,
            pattern=args.select, limit=args.limit,
        )
        rows = [
            {"key": r.key, "status": r.status.value, "checked": r.checked, "errata": len(r.errata)}
            for r in response.results
        ]
        print(_render_response("Families", response, fmt, rows or None))
        if not response.success:
            return EXIT_FAILURE

    elif command == "verify":
        response = handle_verify(args.select, config, extended=args.extended)
        rows = [
            {"topic": r.topic, "check": r.key, "status": r.status.value,
             "checked": r.checked, "errata": len(r.errata)}
            for r in response.results
        ]
        print(_render_response("Verification", response, fmt, rows))
        return response.exit_code

    return EXIT_OK


# ---------------------------------------------------------------------------
# Main entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _UsageParser(
        prog="denumerant",
        description="denumerant - restricted partition counts and the Diophantine equations they generate",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat],
                        default=None, help="Output format (default from configuration)")
    parser.add_argument("--json", dest="output_format", action="store_const", const="json",
                        help="Shorthand for --format json")
    parser.add_argument("--csv", dest="output_format", action="store_const", const="csv",
                        help="Shorthand for --format csv")
    parser.add_argument("--workers", type=_positive, default=None, help="Parallel workers for sweeps")
    parser.add_argument("--verbose", "-v", action="store_true", default=False, help="Log at INFO")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")
    register_cli_commands(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point for the denumerant CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return
    if args.command == "decompose" and (args.modulus is None) != (args.residue is None):
        parser.error("--modulus and --residue go together")

    overrides: Dict[str, Any] = {}
    if args.output_format is not None:
        overrides["output_format"] = args.output_format
    if args.workers is not None:
        overrides["workers"] = args.workers
    try:
        config = ConfigurationService().load_configuration(overrides)
    except ConfigurationError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(EXIT_FAILURE)

    level = logging.INFO if args.verbose else getattr(logging, config.log_level.upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        code = run_cli_command(args.command, args, config)
    except UnknownSelection as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        code = EXIT_USAGE
    except DenumerantError as e:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_FAILURE
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        code = EXIT_FAILURE
    sys.exit(code)


if __name__ == "__main__":
    main()
