"""gspcover oracle command implementation."""

from pathlib import Path
from typing import Optional

from gspcover.commands.solve.execute import finish
from gspcover.core.workbench.solvers import run_oracle
from gspcover.utils.serialization import load_instance


def execute(instance: str, cap: Optional[int] = None, out: Optional[str] = None) -> int:
    """Execute the 'gspcover oracle' command.

    Picks exact-ufp, exact-gsp or exact-due-dates from the instance.

    Args:
        instance: Instance JSON file
        cap: Size cap of the oracle
        out: File for the solution JSON

    Returns:
        int: Exit code (0 for success)
    """
    inst = load_instance(Path(instance))
    return finish(run_oracle(inst, cap), out)
