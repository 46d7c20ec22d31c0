"""CSV experiment reports (RFC 4180: comma separated, CRLF line endings).

The comparison column says what a ratio compares: "same-speed" when the
solver runs on the oracle's unit-speed machine, "speed-augmented" when its
schedule needs a faster machine and may therefore beat the oracle.
"""

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from gspcover.exceptions import SerializationError
from gspcover.utils.filesystem import atomic_write

REPORT_COLUMNS = (
    "instance_id",
    "solver",
    "epsilon",
    "cost",
    "oracle_cost",
    "ratio",
    "guarantee",
    "runtime_seconds",
    "feasible",
    "speed_factor",
    "comparison",
)


@dataclass(frozen=True)
class ReportRow:
    """One solver run. Empty strings mark values that were not computed."""

    instance_id: str
    solver: str
    epsilon: str
    cost: str
    oracle_cost: str = ""
    ratio: str = ""
    guarantee: str = ""
    runtime_seconds: str = ""
    feasible: str = ""
    speed_factor: str = ""
    comparison: str = ""

    def as_list(self) -> List[str]:
        return [getattr(self, column) for column in REPORT_COLUMNS]


def format_report(rows: Sequence[ReportRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(REPORT_COLUMNS)
    for row in rows:
        writer.writerow(row.as_list())
    return buffer.getvalue()


def write_report(path: Path, rows: Sequence[ReportRow]) -> None:
    """Write rows atomically with CRLF line endings."""
    atomic_write(Path(path), format_report(rows))


def read_report(path: Path, columns: Optional[Sequence[str]] = None) -> List[Dict[str, str]]:
    """Rows of a report as dicts.

    Raises:
        SerializationError: If the file is missing or its header is wrong
    """
    path = Path(path)
    if not path.is_file():
        raise SerializationError(f"Report not found: {path}")
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        expected = list(columns or REPORT_COLUMNS)
        if reader.fieldnames != expected:
            raise SerializationError(f"Unexpected report header: {reader.fieldnames}")
        return list(reader)
