"""Tests for gspcover solve command."""

import json

import pytest

from gspcover.commands.solve import execute
from gspcover.core.model.instances import UfpCoverInstance, UfpTask
from gspcover.exceptions import CapExceededError, InfeasibleInstanceError, InvalidParameterError
from gspcover.utils.serialization import save_instance


def test_solve_u1_with_qptas(tmp_path, u1, capsys):
    """The QPTAS prints cost 3 and its guarantee."""
    path = tmp_path / "u1.json"
    save_instance(path, u1)
    assert execute(str(path), solver="qptas") == 0
    captured = capsys.readouterr()
    assert "[OK] qptas: cost 3" in captured.out
    assert "guarantee 171/16" in captured.out


def test_solve_writes_solution(tmp_path, g1):
    """--out stores the outcome as JSON."""
    path = tmp_path / "g1.json"
    out = tmp_path / "solution.json"
    save_instance(path, g1)
    assert execute(str(path), solver="exact-gsp", out=str(out)) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["solver"] == "exact-gsp"
    assert data["cost"] == {"num": 11, "den": 1}
    assert [job_id for job_id, _ in data["solution"]["starts"]] == [2, 1]


def test_solve_speedup_prints_speed(tmp_path, g1, capsys):
    """Speed-augmented solvers print their machine speed."""
    path = tmp_path / "g1.json"
    save_instance(path, g1)
    assert execute(str(path), solver="speedup") == 0
    assert "machine speed 729/64" in capsys.readouterr().out


def test_solve_wrong_kind(tmp_path, u1):
    """Schedule solvers refuse cover instances."""
    path = tmp_path / "u1.json"
    save_instance(path, u1)
    with pytest.raises(InvalidParameterError):
        execute(str(path), solver="e-approx")


def test_solve_infeasible(tmp_path):
    """An uncoverable instance raises for the dispatcher to map to exit 2."""
    path = tmp_path / "bad.json"
    save_instance(path, UfpCoverInstance(2, (1, 1), (UfpTask("a", 0, 1, 5, 1),)))
    with pytest.raises(InfeasibleInstanceError):
        execute(str(path), solver="exact-ufp")


def test_solve_cap(tmp_path, u1):
    """A cap below the task count raises."""
    path = tmp_path / "u1.json"
    save_instance(path, u1)
    with pytest.raises(CapExceededError):
        execute(str(path), solver="exact-ufp", cap=2)
