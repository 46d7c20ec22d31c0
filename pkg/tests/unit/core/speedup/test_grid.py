"""Unit tests for the geometric interval grid and per-interval patterns."""

from fractions import Fraction
from math import comb

import pytest

from gspcover.core.speedup.grid import IntervalGrid, artificial_release, round_completion
from gspcover.core.speedup.layout import Slot, SlotLayout, Window
from gspcover.core.speedup.patterns import Pattern, count_patterns, enumerate_patterns
from gspcover.exceptions import CapExceededError, InvalidParameterError


def _compositions(total, parts):
    """Ways to write total as an ordered sum of parts nonnegative integers."""
    if total < 0:
        return 0
    if parts == 0:
        return int(total == 0)
    return comb(total + parts - 1, parts - 1)


def _edge_cases(labels, min_len):
    """(start gap fixed at 0, its lower bound, end gap fixed at 0, its lower bound, length minima).

    A slot touching an interval boundary may be shorter than min_len, so a
    boundary slot splits into the touching case and the detached case.
    """
    mins = [min_len if label == "slot" else 1 for label in labels]
    if labels == ["window"]:
        return [(False, 0, False, 0, [1])]
    if labels == ["slot"]:
        return [
            (True, 0, False, 0, [1]),
            (False, 1, True, 0, [1]),
            (False, 1, False, 1, [min_len]),
        ]
    starts = [(False, 0, mins[0])]
    if labels[0] == "slot":
        starts = [(True, 0, 1), (False, 1, min_len)]
    ends = [(False, 0, mins[-1])]
    if labels[-1] == "slot":
        ends = [(True, 0, 1), (False, 1, min_len)]
    return [
        (s_zero, s_min, e_zero, e_min, [s_len] + mins[1:-1] + [e_len])
        for s_zero, s_min, s_len in starts
        for e_zero, e_min, e_len in ends
    ]


def _closed_form_count(steps, min_len, max_slots):
    """Patterns with at most max_slots slots and one window, by labelled segment sequences."""
    total = 1
    for windows in (0, 1):
        for slots in range(max_slots + 1):
            segments = slots + windows
            if segments == 0:
                continue
            for window_at in range(slots + 1) if windows else [None]:
                labels = ["slot"] * slots
                if window_at is not None:
                    labels.insert(window_at, "window")
                for s_zero, s_min, e_zero, e_min, mins in _edge_cases(labels, min_len):
                    free = sum(mins) + s_min + e_min
                    parts = (segments - 1) + segments + (not s_zero) + (not e_zero)
                    total += _compositions(steps - free, parts)
    return total


class TestRounding:
    """Tests for artificial releases and completion rounding."""

    def test_artificial_release(self, half):
        """p = 12 gives (3/2)^3 = 27/8."""
        assert artificial_release(12, half) == Fraction(27, 8)

    def test_artificial_release_unit_job(self, half):
        """p = 1 gives (3/2)^-3."""
        assert artificial_release(1, half) == Fraction(8, 27)

    def test_round_completion(self, half):
        """4 rounds up to 81/16; a power stays put."""
        assert round_completion(4, half) == Fraction(81, 16)
        assert round_completion(Fraction(9, 4), half) == Fraction(9, 4)

    def test_bad_arguments(self, half):
        """Nonpositive inputs are refused."""
        with pytest.raises(InvalidParameterError):
            artificial_release(0, half)
        with pytest.raises(InvalidParameterError):
            round_completion(0, half)
        with pytest.raises(InvalidParameterError):
            round_completion(1, 0)

    @pytest.mark.parametrize("eps", [Fraction(1, 4), Fraction(1, 2), Fraction(9, 10), 1])
    def test_artificial_release_sandwich(self, eps):
        """r(j) <= eps p / (1+eps) < (1+eps) r(j), and r(j) is a power of 1+eps."""
        eps = Fraction(eps)
        for p in range(1, 41):
            release = artificial_release(p, eps)
            target = eps * p / (1 + eps)
            assert release <= target < (1 + eps) * release
            assert IntervalGrid(eps).start(IntervalGrid(eps).interval_of(release)) == release


class TestIntervalGrid:
    """Tests for IntervalGrid."""

    def test_eps_one(self):
        """eps = 1: intervals double and hold 9 fine points."""
        grid = IntervalGrid(1)
        assert grid.points(0) == tuple(1 + Fraction(k, 8) for k in range(9))
        assert grid.start(3) == 8
        assert grid.steps(2) == 8
        assert grid.min_slot_steps() == 8

    def test_eps_half(self, half):
        """eps = 1/2: step 1/96, 48 steps per interval, shortest slot 12 steps."""
        grid = IntervalGrid(half)
        assert grid.step == Fraction(1, 96)
        assert grid.steps(0) == 48
        assert grid.min_slot_steps() == 12
        assert grid.points(1)[-1] == grid.start(2)

    def test_interval_lookup(self, half):
        """Left and right endpoints map to different intervals at R_t."""
        grid = IntervalGrid(half)
        assert grid.interval_of(1) == 0
        assert grid.interval_of(Fraction(3, 2)) == 1
        assert grid.end_interval_of(Fraction(3, 2)) == 0
        assert grid.interval_of(Fraction(1, 2)) == -2

    def test_snap(self):
        """Times move up to the next fine point."""
        grid = IntervalGrid(1)
        assert grid.snap(1) == 1
        assert grid.snap(Fraction(17, 16)) == Fraction(9, 8)
        assert grid.is_grid_point(Fraction(9, 8))
        assert not grid.is_grid_point(Fraction(17, 16))
        with pytest.raises(InvalidParameterError):
            grid.snap(0)


class TestPatterns:
    """Tests for pattern counting and enumeration."""

    def test_single_step(self):
        """One step: idle, a slot or a window."""
        assert count_patterns(1, 1) == 3

    def test_enumeration_matches_count(self, g1):
        """Enumerated patterns agree with the count, the empty one first."""
        patterns = enumerate_patterns(0, 1, jobs=[g1.jobs[0]])
        assert len(patterns) == count_patterns(8, 8, 1)
        assert patterns[0] == Pattern(0, 8)
        for pattern in patterns:
            assert len(pattern.slots) <= 1
            for a, b in pattern.slots:
                assert b - a == 8 or a == 0 or b == 8

    def test_count_independent_of_interval(self):
        """Every interval has the same pattern count."""
        assert len(enumerate_patterns(0, 1, cap=10 ** 6)) == len(enumerate_patterns(5, 1, cap=10 ** 6))

    def test_cap(self, half):
        """Too many patterns raise."""
        with pytest.raises(CapExceededError):
            enumerate_patterns(0, half, cap=10)

    @pytest.mark.parametrize("eps", [1, Fraction(9, 10), Fraction(4, 5)])
    @pytest.mark.parametrize("max_slots", [0, 1, 2, None])
    def test_count_closed_form(self, eps, max_slots):
        """The scan count equals a sum of binomials over segment labellings."""
        grid = IntervalGrid(eps)
        steps, min_len = grid.steps(0), grid.min_slot_steps()
        assert count_patterns(steps, min_len, max_slots) == _closed_form_count(
            steps, min_len, steps if max_slots is None else max_slots
        )

    def test_closed_form_small_cases(self):
        """One step has 3 patterns; eight steps without slots have 36 windows and the empty one."""
        assert _closed_form_count(1, 1, 1) == 3
        assert _closed_form_count(8, 8, 0) == 37


class TestSlotLayout:
    """Tests for SlotLayout."""

    def test_join_across_boundary(self):
        """Slots touching R_1 from both sides merge into one."""
        grid = IntervalGrid(1)
        patterns = [Pattern(0, 8, ((0, 8),)), Pattern(1, 8, ((0, 4),))]
        layout = SlotLayout.from_patterns(patterns, grid, joins=[0])
        assert layout.slots == (Slot(1, 3),)
        assert layout.validate(grid) == (True, [])
        back, joins = layout.to_patterns(grid)
        assert back == patterns
        assert joins == {0}

    def test_window_round_trip(self):
        """Windows keep their interval."""
        grid = IntervalGrid(1)
        layout = SlotLayout.from_patterns([Pattern(1, 8, ((0, 2),), (4, 8))], grid)
        assert layout.window(1) == Window(1, 3, 4)
        assert layout.window(0) is None
        assert layout.to_patterns(grid)[0] == [Pattern(1, 8, ((0, 2),), (4, 8))]

    def test_overlap_reported(self):
        """Overlapping pieces fail validation."""
        grid = IntervalGrid(1)
        valid, errors = SlotLayout((Slot(1, 2), Slot(Fraction(3, 2), 2))).validate(grid)
        assert not valid
        assert any("overlaps" in error for error in errors)

    def test_off_grid(self):
        """Endpoints must be fine points."""
        grid = IntervalGrid(1)
        valid, errors = SlotLayout((Slot(1, Fraction(10, 9)),)).validate(grid)
        assert not valid
        assert "off the grid" in errors[0]

    def test_bad_join(self):
        """A join needs slots on both sides."""
        grid = IntervalGrid(1)
        with pytest.raises(InvalidParameterError):
            SlotLayout.from_patterns([Pattern(0, 8, ((0, 8),))], grid, joins=[0])

    def test_duplicate_interval(self):
        """One pattern per interval."""
        grid = IntervalGrid(1)
        with pytest.raises(InvalidParameterError):
            SlotLayout.from_patterns([Pattern(0, 8), Pattern(0, 8)], grid)
