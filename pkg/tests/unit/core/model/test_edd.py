"""Unit tests for due date feasibility."""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from gspcover.core.model.edd import (
    DueDateAssignment,
    edd_feasible,
    edd_simulate,
    interval_violation,
)
from gspcover.core.model.instances import Job
from gspcover.exceptions import InvalidParameterError


class TestEddFeasible:
    """Tests for edd_feasible."""

    def test_feasible_pair(self):
        """p=(2,3), d=(5,3) is feasible."""
        jobs = [Job(1, 2), Job(2, 3)]
        assert edd_feasible(jobs, {1: 5, 2: 3})
        assert edd_feasible(jobs, {1: 5, 2: 3}, method="intervals")

    def test_infeasible_pair_with_witness(self):
        """p=(2,3), d=(4,3) fails on [0, 4] with excess 1."""
        jobs = [Job(1, 2), Job(2, 3)]
        assert not edd_feasible(jobs, {1: 4, 2: 3})
        witness = interval_violation(jobs, {1: 4, 2: 3})
        assert witness is not None
        assert (witness.start, witness.end, witness.excess) == (0, 4, 1)
        assert witness.later_volume == 0

    def test_single_job(self):
        """p=1, d=1 is feasible."""
        assert edd_feasible([Job(1, 1)], {1: 1})

    def test_unknown_method(self):
        """Only simulation and intervals exist."""
        with pytest.raises(InvalidParameterError):
            edd_feasible([Job(1, 1)], {1: 1}, method="guess")

    def test_methods_agree_on_exhaustive_grids(self):
        """Simulation and the interval condition agree on random instances."""
        rng = np.random.default_rng(5)
        for _ in range(25):
            n = int(rng.integers(1, 4))
            jobs = [
                Job(i + 1, int(rng.integers(1, 4)), int(rng.integers(0, 3))) for i in range(n)
            ]
            horizon = max(job.r for job in jobs) + sum(job.p for job in jobs)
            grids = [range(job.r + 1, horizon + 1) for job in jobs]
            for dates in itertools.product(*grids):
                due = {job.id: d for job, d in zip(jobs, dates)}
                assert edd_feasible(jobs, due) == edd_feasible(jobs, due, method="intervals")

    def test_due_date_before_release_plus_size(self):
        """A due date earlier than r + p fails under both methods."""
        jobs = [Job(1, 2, 1), Job(2, 2, 2), Job(3, 1, 2)]
        due = {1: 4, 2: 6, 3: 1}
        assert not edd_feasible(jobs, due)
        assert not edd_feasible(jobs, due, method="intervals")
        witness = interval_violation(jobs, due)
        assert (witness.start, witness.end) == (2, 1)
        assert witness.excess == 1

    def test_due_date_inside_own_window(self):
        """r=3, p=2, d=4 leaves one unit undone."""
        witness = interval_violation([Job(1, 2, 3)], {1: 4})
        assert (witness.start, witness.end, witness.excess) == (3, 4, 1)
        assert not edd_feasible([Job(1, 2, 3)], {1: 4})

    def test_methods_agree_with_early_due_dates(self):
        """Agreement holds when due dates range below the release dates."""
        rng = np.random.default_rng(11)
        for _ in range(15):
            jobs = [Job(i + 1, int(rng.integers(1, 3)), int(rng.integers(0, 3))) for i in range(3)]
            for dates in itertools.product(range(1, 8), repeat=3):
                due = {job.id: d for job, d in zip(jobs, dates)}
                assert edd_feasible(jobs, due) == edd_feasible(jobs, due, method="intervals")


class TestEddSimulate:
    """Tests for the preemptive EDD trace."""

    def test_trace(self):
        """The earlier due date runs first."""
        trace = edd_simulate([Job(1, 2), Job(2, 3)], {1: 5, 2: 3})
        assert trace.feasible
        assert trace.completion_of(2) == 3
        assert trace.completion_of(1) == 5
        assert not trace.is_preemptive

    def test_preemption(self):
        """A released urgent job interrupts a long one."""
        jobs = [Job(1, 4, 0), Job(2, 1, 1)]
        trace = edd_simulate(jobs, {1: 6, 2: 2})
        assert trace.is_preemptive
        assert trace.completion_of(2) == 2
        assert trace.completion_of(1) == 5

    def test_idle_gap(self):
        """The machine idles until the next release."""
        trace = edd_simulate([Job(1, 1, 0), Job(2, 1, 5)], {1: 1, 2: 6})
        assert trace.completion_of(2) == 6
        assert trace.segments[-1].start == 5


class TestDueDateAssignment:
    """Tests for DueDateAssignment."""

    def test_from_mapping(self):
        """Mapping round trip with exact values."""
        assignment = DueDateAssignment.from_mapping({2: 3, 1: Fraction(9, 2)})
        assert assignment[1] == Fraction(9, 2)
        assert len(assignment) == 2
        assert assignment.as_dict() == {1: Fraction(9, 2), 2: 3}

    def test_one_date_per_job(self):
        """A job cannot carry two due dates."""
        with pytest.raises(InvalidParameterError):
            DueDateAssignment(((1, 2), (1, 3)))

    def test_accepted_by_feasibility(self):
        """edd_feasible takes assignments as well as dicts."""
        assignment = DueDateAssignment.from_mapping({1: 5, 2: 3})
        assert edd_feasible([Job(1, 2), Job(2, 3)], assignment)
