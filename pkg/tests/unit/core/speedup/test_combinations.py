"""Unit tests for pattern combinations across intervals."""

from fractions import Fraction

import pytest

from gspcover.core.model.instances import Job
from gspcover.core.model.step import StepCostFunction
from gspcover.core.speedup.combinations import (
    Combination,
    count_combinations,
    enumerate_combinations,
    interval_span,
    iter_combinations,
)
from gspcover.core.speedup.grid import IntervalGrid, artificial_release
from gspcover.core.speedup.layout import Slot, SlotLayout, Window
from gspcover.core.speedup.patterns import Pattern, count_patterns, enumerate_patterns
from gspcover.core.speedup.slp import SpeedupJob
from gspcover.exceptions import CapExceededError, InvalidParameterError

NINE_TENTHS = Fraction(9, 10)


def _frame_job(job_id, p, eps):
    job = Job(job_id, p, f=StepCostFunction.linear(1, 10))
    return SpeedupJob(job, Fraction(p) / (1 + eps) ** 5, artificial_release(p, eps))


class TestCountCombinations:
    """Tests for count_combinations and iter_combinations."""

    def test_join_is_optional(self):
        """Two boundary slots may stay apart or merge into one."""
        per_interval = [[Pattern(0, 8, ((0, 8),))], [Pattern(1, 8, ((0, 4),))]]
        combos = list(iter_combinations(per_interval, 2))
        assert count_combinations(per_interval, 2) == 2
        assert {combo.joins for combo in combos} == {frozenset(), frozenset({0})}
        assert sorted(combo.slot_count for combo in combos) == [1, 2]

    def test_slot_budget_forces_join(self):
        """With one slot allowed only the merged layout remains."""
        grid = IntervalGrid(1)
        per_interval = [[Pattern(0, 8, ((0, 8),))], [Pattern(1, 8, ((0, 4),))]]
        assert count_combinations(per_interval, 1) == 1
        (combo,) = iter_combinations(per_interval, 1)
        assert combo.layout(grid).slots == (Slot(1, 3),)

    def test_no_join_without_touching_slots(self):
        """A window at the boundary never joins."""
        per_interval = [[Pattern(0, 8, (), (0, 8))], [Pattern(1, 8, ((0, 4),))]]
        (combo,) = iter_combinations(per_interval, 3)
        assert combo.joins == frozenset()
        assert combo.layout(IntervalGrid(1)).windows == (Window(0, 1, 2),)

    @pytest.mark.parametrize("max_slots", [0, 1, 2])
    def test_count_matches_iteration(self, max_slots):
        """The counting pass agrees with the enumeration over two intervals."""
        per_interval = [enumerate_patterns(t, 1, jobs=[Job(1, 1), Job(2, 1)]) for t in (0, 1)]
        combos = list(iter_combinations(per_interval, max_slots))
        assert count_combinations(per_interval, max_slots) == len(combos)
        assert all(combo.slot_count <= max_slots for combo in combos)

    def test_window_only_patterns(self):
        """Without slots one interval of 8 steps has the empty pattern and 36 windows."""
        assert count_combinations([enumerate_patterns(0, 1)], 0) == 37


class TestIntervalSpan:
    """Tests for interval_span."""

    def test_single_short_job(self):
        """A unit job at eps = 9/10 stays in the interval of its artificial release."""
        grid = IntervalGrid(NINE_TENTHS)
        job = _frame_job(1, 1, NINE_TENTHS)
        assert job.release == Fraction(100, 361)
        assert interval_span([job], grid) == (-2, -2)

    def test_span_grows_with_work(self, half):
        """More work reaches later intervals."""
        grid = IntervalGrid(half)
        short = interval_span([_frame_job(1, 1, half)], grid)
        long = interval_span([_frame_job(1, 1, half), _frame_job(2, 40, half)], grid)
        assert long[0] == short[0]
        assert long[1] > short[1]

    def test_no_jobs(self, half):
        """An empty job list has no span."""
        with pytest.raises(InvalidParameterError):
            interval_span([], IntervalGrid(half))


class TestEnumerateCombinations:
    """Tests for enumerate_combinations."""

    def test_single_interval(self):
        """One interval and one job: every pattern with at most one slot."""
        grid = IntervalGrid(NINE_TENTHS)
        total, combos = enumerate_combinations([_frame_job(1, 1, NINE_TENTHS)], grid)
        assert total == count_patterns(grid.steps(-2), grid.min_slot_steps(), 1)
        combos = list(combos)
        assert len(combos) == total
        assert all(isinstance(combo, Combination) for combo in combos)
        assert all(combo.patterns[0].t == -2 for combo in combos)

    def test_cap_on_combinations(self):
        """A cap below the count refuses the enumeration."""
        grid = IntervalGrid(NINE_TENTHS)
        with pytest.raises(CapExceededError):
            enumerate_combinations([_frame_job(1, 1, NINE_TENTHS)], grid, cap=5)

    def test_cap_on_patterns(self, half):
        """At eps = 1/2 a single interval already has too many patterns."""
        with pytest.raises(CapExceededError):
            enumerate_combinations([_frame_job(1, 2, half)], IntervalGrid(half))


class TestOverflowRoom:
    """Tests for SlotLayout.leaves_overflow_room."""

    def test_slot_right_after_window(self):
        """A slot inside the window's overflow gap is refused."""
        grid = IntervalGrid(1)
        assert grid.overflow_gap(0) == Fraction(1, 2)
        layout = SlotLayout((Slot(Fraction(7, 4), 2),), (Window(0, 1, Fraction(3, 2)),))
        assert not layout.leaves_overflow_room(grid)

    def test_slot_after_gap(self):
        """A slot starting a full gap later is fine, as is a slot before the window."""
        grid = IntervalGrid(1)
        layout = SlotLayout(
            (Slot(1, Fraction(5, 4)), Slot(2, 3)), (Window(0, Fraction(5, 4), Fraction(3, 2)),)
        )
        assert layout.leaves_overflow_room(grid)
