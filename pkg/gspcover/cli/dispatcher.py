"""CLI dispatcher - routes commands to their handlers.

Uses a table-driven command mapping. Exit codes: 0 ok, 1 error,
2 infeasible instance, 3 cap exceeded.
"""

import sys
import argparse
import logging

from gspcover import __version__
from gspcover.exceptions import CapExceededError, GspCoverError, InfeasibleInstanceError

EXIT_ERROR = 1
EXIT_INFEASIBLE = 2
EXIT_CAP_EXCEEDED = 3


# ── Command handler functions ──────────────────────────────────────

def _handle_generate(args) -> int:
    from gspcover.commands.generate import execute
    return execute(
        args.kind,
        seed=args.seed,
        n=args.n,
        m=args.m,
        k=args.k,
        releases=args.releases,
        weight_bound=args.weight_bound,
        out=args.out,
    )


def _handle_solve(args) -> int:
    from gspcover.commands.solve import execute
    return execute(
        args.instance,
        solver=args.solver,
        epsilon=args.epsilon,
        cap=args.cap,
        out=args.out,
    )


def _handle_oracle(args) -> int:
    from gspcover.commands.oracle import execute
    return execute(args.instance, cap=args.cap, out=args.out)


def _handle_compare(args) -> int:
    from gspcover.commands.compare import execute
    return execute(
        solver=args.solver,
        epsilon=args.epsilon,
        seed=args.seed,
        count=args.count,
        instances=args.instances,
        config=args.config,
        cap=args.cap,
        oracle=not args.no_oracle,
        deterministic=args.deterministic,
        workers=args.workers,
        out=args.out,
    )


def _handle_report(args) -> int:
    from gspcover.commands.report import execute
    return execute(args.report, out=args.out)


# ── Command dispatch table ────────────────────────────────────────

COMMANDS = {
    "generate": _handle_generate,
    "solve":    _handle_solve,
    "oracle":   _handle_oracle,
    "compare":  _handle_compare,
    "report":   _handle_report,
}


def _build_parser() -> argparse.ArgumentParser:
    from gspcover.core.workbench.solvers import SOLVERS

    parser = argparse.ArgumentParser(
        prog="gspcover",
        description="gspcover - approximation algorithms for UFP-cover and general scheduling",
    )

    parser.add_argument(
        "--version",
        action="version",
        version=f"gspcover {__version__}",
        help="Show program's version number and exit"
    )

    parser.add_argument(
        "--no-color",
        action="store_true",
        help="Disable color output"
    )

    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Log solver progress to stderr"
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Generate command
    generate_parser = subparsers.add_parser("generate", help="Generate a seeded random instance")
    generate_parser.add_argument("kind", choices=["ufp", "gsp"], help="Instance kind")
    generate_parser.add_argument("--seed", type=int, default=0, help="Random seed")
    generate_parser.add_argument("-n", "--n", type=int, default=6, help="Number of tasks or jobs")
    generate_parser.add_argument("-m", "--m", type=int, default=5, help="Path edges (ufp)")
    generate_parser.add_argument("-k", "--k", type=int, default=2, help="Class functions (gsp)")
    generate_parser.add_argument(
        "--releases", type=int, nargs="+", default=[0], help="Release dates to draw from (gsp)"
    )
    generate_parser.add_argument("--weight-bound", type=int, default=3, help="Weight bound W (gsp)")
    generate_parser.add_argument("--out", help="Instance file to write (stdout by default)")

    # Solve command
    solve_parser = subparsers.add_parser("solve", help="Run a solver on an instance file")
    solve_parser.add_argument("instance", help="Instance JSON file")
    solve_parser.add_argument("--solver", required=True, choices=sorted(SOLVERS), help="Solver")
    solve_parser.add_argument("--epsilon", default="1/2", help="Accuracy parameter, e.g. 1/4")
    solve_parser.add_argument("--cap", type=int, help="Enumeration cap of the solver")
    solve_parser.add_argument("--out", help="Write the solution as JSON")

    # Oracle command
    oracle_parser = subparsers.add_parser("oracle", help="Solve an instance exactly")
    oracle_parser.add_argument("instance", help="Instance JSON file")
    oracle_parser.add_argument("--cap", type=int, help="Size cap of the oracle")
    oracle_parser.add_argument("--out", help="Write the solution as JSON")

    # Compare command
    compare_parser = subparsers.add_parser("compare", help="Compare a solver against the oracle")
    compare_parser.add_argument("--solver", choices=sorted(SOLVERS), help="Solver")
    compare_parser.add_argument("--epsilon", default="1/2", help="Accuracy parameter")
    compare_parser.add_argument("--seed", type=int, default=0, help="First seed")
    compare_parser.add_argument("--count", type=int, default=10, help="Number of seeds")
    compare_parser.add_argument("--instances", nargs="*", default=[], help="Extra instance files")
    compare_parser.add_argument("--config", help="Experiment config JSON (overrides flags)")
    compare_parser.add_argument("--cap", type=int, help="Enumeration cap of the solver")
    compare_parser.add_argument("--no-oracle", action="store_true", help="Skip the oracle")
    compare_parser.add_argument(
        "--deterministic", action="store_true", help="Leave runtimes out of the report"
    )
    compare_parser.add_argument("--workers", type=int, default=1, help="Parallel processes")
    compare_parser.add_argument("--out", default="results", help="Output directory")

    # Report command
    report_parser = subparsers.add_parser("report", help="Summarize a CSV report")
    report_parser.add_argument("report", help="report.csv written by compare")
    report_parser.add_argument("--out", help="Write the summary as JSON")

    return parser


# ── Main entry point ──────────────────────────────────────────────

def main() -> int:
    """Main CLI entry point.

    Returns:
        Exit code (0 ok, 1 error, 2 infeasible instance, 3 cap exceeded)
    """
    parser = _build_parser()
    args = parser.parse_args()

    # Handle global flags
    if hasattr(args, 'no_color') and args.no_color:
        from gspcover.utils.ui.color import set_color_enabled
        set_color_enabled(False)

    logging.basicConfig(
        level=logging.DEBUG if getattr(args, 'verbose', False) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    if args.command is None:
        parser.print_help()
        return 0

    # Table-driven dispatch
    handler = COMMANDS.get(args.command)

    if handler is None:
        print(f"gspcover: Command '{args.command}' not yet implemented")
        print(f"Available: {', '.join(COMMANDS.keys())}")
        return EXIT_ERROR

    try:
        return handler(args)
    except InfeasibleInstanceError as e:
        print(f"Error: {str(e)}")
        return EXIT_INFEASIBLE
    except CapExceededError as e:
        print(f"Error: {str(e)}")
        print("Hint: Raise the limit with --cap")
        return EXIT_CAP_EXCEEDED
    except GspCoverError as e:
        print(f"Error: {str(e)}")
        return EXIT_ERROR
    except OSError as e:
        print(f"Error: {str(e)}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
