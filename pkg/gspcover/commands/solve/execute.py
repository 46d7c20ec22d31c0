"""gspcover solve command implementation.

Runs one named solver on an instance file and reports cost and feasibility.
"""

from pathlib import Path
from typing import Optional

from gspcover.core.model.numeric import format_fraction, to_fraction
from gspcover.core.workbench.solvers import SolverOutcome, run_solver
from gspcover.exceptions import InfeasibleInstanceError
from gspcover.utils.filesystem import atomic_write
from gspcover.utils.serialization import dumps_canonical, load_instance


def print_outcome(outcome: SolverOutcome) -> None:
    """Print the summary lines shared by solve and oracle."""
    from gspcover.utils.ui.color import bold, fail_marker, ok_marker

    marker = ok_marker() if outcome.feasible else fail_marker()
    print(f"{marker} {outcome.solver}: cost {bold(format_fraction(outcome.cost))}")
    if outcome.guarantee is not None:
        print(f"  guarantee {format_fraction(outcome.guarantee)}")
    if outcome.speed is not None:
        print(f"  machine speed {format_fraction(outcome.speed)} ({float(outcome.speed):.4f})")
    for key, value in sorted(outcome.stats.items()):
        print(f"  {key}: {value}")


def finish(outcome: SolverOutcome, out: Optional[str]) -> int:
    """Raise on an empty result, print it and optionally write it."""
    if outcome.cost is None:
        raise InfeasibleInstanceError(f"{outcome.solver} found no feasible solution")
    print_outcome(outcome)
    if out is not None:
        atomic_write(Path(out), dumps_canonical(outcome.to_dict()))
        print(f"  solution written to {out}")
    return 0 if outcome.feasible else 1


def execute(
    instance: str,
    solver: str,
    epsilon: str = "1/2",
    cap: Optional[int] = None,
    out: Optional[str] = None,
) -> int:
    """Execute the 'gspcover solve' command.

    Args:
        instance: Instance JSON file
        solver: Solver name
        epsilon: Accuracy parameter as text ("1/4", "0.25")
        cap: Enumeration cap handed to the solver
        out: File for the solution JSON

    Returns:
        int: Exit code (0 for success, 1 when the output fails its check)

    Raises:
        InfeasibleInstanceError: If the solver returns no solution
        CapExceededError: If the solver's cap is exceeded
    """
    inst = load_instance(Path(instance))
    outcome = run_solver(solver, inst, to_fraction(epsilon), cap)
    return finish(outcome, out)
