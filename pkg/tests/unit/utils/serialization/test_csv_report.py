"""Unit tests for CSV experiment reports."""

import pytest

from gspcover.exceptions import SerializationError
from gspcover.utils.serialization import REPORT_COLUMNS, ReportRow, format_report, read_report, write_report


def _row(instance_id="ufp-s0", cost="3"):
    return ReportRow(instance_id, "ufp-qptas", "1/2", cost, oracle_cost="3", ratio="1.0000",
                     guarantee="10.6875", runtime_seconds="", feasible="yes")


def test_header_and_crlf():
    """The header comes first and lines end in CRLF."""
    text = format_report([_row()])
    lines = text.split("\r\n")
    assert lines[0] == ",".join(REPORT_COLUMNS)
    assert lines[1].startswith("ufp-s0,ufp-qptas,1/2,3,3,1.0000")
    assert text.endswith("\r\n")


def test_empty_fields_kept():
    """Missing values are empty columns."""
    row = ReportRow("gsp-s1", "gsp-speedup", "1/2", "")
    assert format_report([row]).split("\r\n")[1] == "gsp-s1,gsp-speedup,1/2,,,,,,,,"


def test_write_and_read(tmp_path):
    """Rows read back as dicts keyed by column."""
    path = tmp_path / "report.csv"
    write_report(path, [_row(), _row("ufp-s1", "5")])
    rows = read_report(path)
    assert [row["cost"] for row in rows] == ["3", "5"]
    assert rows[0]["feasible"] == "yes"
    assert b"\r\n" in path.read_bytes()


def test_read_missing(tmp_path):
    """A missing report raises."""
    with pytest.raises(SerializationError, match="not found"):
        read_report(tmp_path / "report.csv")


def test_read_wrong_header(tmp_path):
    """A foreign CSV is refused."""
    path = tmp_path / "other.csv"
    path.write_text("a,b\r\n1,2\r\n")
    with pytest.raises(SerializationError, match="header"):
        read_report(path)


def test_comparison_is_last_column(tmp_path):
    """The comparison marker travels with its row."""
    path = tmp_path / "report.csv"
    row = ReportRow("gsp-s0", "speedup", "1/2", "4", oracle_cost="5", ratio="0.8",
                    speed_factor="11.390625", comparison="speed-augmented")
    write_report(path, [row])
    assert REPORT_COLUMNS[-1] == "comparison"
    assert read_report(path)[0]["comparison"] == "speed-augmented"
