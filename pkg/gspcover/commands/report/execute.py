"""gspcover report command implementation."""

from pathlib import Path
from typing import Optional

from gspcover.core.workbench.experiment import summarize_rows
from gspcover.utils.filesystem import atomic_write
from gspcover.utils.serialization import REPORT_COLUMNS, dumps_canonical, read_report


def execute(report: str, out: Optional[str] = None) -> int:
    """Execute the 'gspcover report' command.

    Reads a CSV written by compare and prints per-solver statistics.

    Args:
        report: Path of report.csv
        out: File for the statistics as JSON

    Returns:
        int: Exit code (0 for success, 1 for error)
    """
    from gspcover.utils.ui.color import bold, dim

    rows = read_report(Path(report), REPORT_COLUMNS)
    if not rows:
        print("Report has no rows")
        return 1

    summary = summarize_rows(rows)
    for solver, entry in summary.items():
        print(bold(solver))
        print(f"  instances: {entry['instances']}  feasible: {entry['feasible']}")
        if entry["compared"]:
            print(f"  compared:  {entry['compared']}  "
                  f"max ratio {entry['max_ratio']:.4f}  mean ratio {entry['mean_ratio']:.4f}")
        else:
            print(dim("  no oracle comparison"))
        if entry["comparison"]:
            print(f"  comparison: {entry['comparison']}")

    if out is not None:
        atomic_write(Path(out), dumps_canonical(summary))
        print(f"Summary written to {out}")
    return 0
