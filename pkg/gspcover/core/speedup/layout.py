"""Slot layouts spanning several intervals."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from gspcover.core.speedup.grid import IntervalGrid
from gspcover.core.speedup.patterns import Pattern
from gspcover.exceptions import InvalidParameterError


@dataclass(frozen=True)
class Slot:
    """Large-job slot [beg, end)."""

    beg: Fraction
    end: Fraction

    @property
    def size(self) -> Fraction:
        return self.end - self.beg


@dataclass(frozen=True)
class Window:
    """Small-job window [a, b) inside interval t."""

    t: int
    a: Fraction
    b: Fraction

    @property
    def rem(self) -> Fraction:
        return self.b - self.a


@dataclass(frozen=True)
class SlotLayout:
    """Slots and windows over the whole horizon, one pattern per interval.

    Attributes:
        slots: Slots ordered by begin time
        windows: Windows ordered by interval
    """

    slots: Tuple[Slot, ...] = ()
    windows: Tuple[Window, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "slots", tuple(sorted(self.slots, key=lambda s: (s.beg, s.end))))
        object.__setattr__(self, "windows", tuple(sorted(self.windows, key=lambda w: w.t)))

    def window(self, t: int) -> Optional[Window]:
        for window in self.windows:
            if window.t == t:
                return window
        return None

    def validate(self, grid: IntervalGrid) -> Tuple[bool, List[str]]:
        """Check disjointness and grid alignment.

        Returns:
            tuple: (is_valid, errors)
        """
        errors: List[str] = []
        pieces = [(s.beg, s.end, "slot") for s in self.slots]
        pieces += [(w.a, w.b, f"window {w.t}") for w in self.windows]
        for beg, end, name in pieces:
            if end <= beg:
                errors.append(f"{name} [{beg}, {end}) is empty")
            for point in (beg, end):
                if not grid.is_grid_point(point):
                    errors.append(f"{name} endpoint {point} is off the grid")
        pieces.sort()
        for (b1, e1, n1), (b2, _, n2) in zip(pieces, pieces[1:]):
            if b2 < e1:
                errors.append(f"{n1} overlaps {n2}")
        seen: Set[int] = set()
        for w in self.windows:
            if w.t in seen:
                errors.append(f"interval {w.t} has more than one window")
            seen.add(w.t)
            if w.a < grid.start(w.t) or w.b > grid.start(w.t + 1):
                errors.append(f"window {w.t} leaves its interval")
        return len(errors) == 0, errors

    def leaves_overflow_room(self, grid: IntervalGrid) -> bool:
        """Whether nothing starts within grid.overflow_gap(t) after the window of interval t."""
        begins = [s.beg for s in self.slots] + [w.a for w in self.windows]
        for window in self.windows:
            limit = window.b + grid.overflow_gap(window.t)
            if any(window.b <= beg < limit for beg in begins):
                return False
        return True

    @classmethod
    def from_patterns(
        cls, patterns: Sequence[Pattern], grid: IntervalGrid, joins: Iterable[int] = ()
    ) -> "SlotLayout":
        """Combine per-interval patterns.

        A boundary t in ``joins`` merges the slot touching the end of
        interval t with the slot touching the start of interval t + 1.

        Raises:
            InvalidParameterError: If two patterns share an interval or a join has no slots to merge
        """
        by_t: Dict[int, Pattern] = {}
        for pattern in patterns:
            if pattern.t in by_t:
                raise InvalidParameterError(f"Two patterns for interval {pattern.t}")
            by_t[pattern.t] = pattern

        slots: List[Slot] = []
        windows: List[Window] = []
        for t in sorted(by_t):
            pattern = by_t[t]
            for beg, end in pattern.slot_times(grid):
                slots.append(Slot(beg, end))
            times = pattern.window_times(grid)
            if times is not None:
                windows.append(Window(t, times[0], times[1]))

        slots.sort(key=lambda s: s.beg)
        for t in sorted(set(joins)):
            boundary = grid.start(t + 1)
            left = next((s for s in slots if s.end == boundary), None)
            right = next((s for s in slots if s.beg == boundary), None)
            if left is None or right is None:
                raise InvalidParameterError(f"No slots to join at the end of interval {t}")
            slots.remove(left)
            slots.remove(right)
            slots.append(Slot(left.beg, right.end))
            slots.sort(key=lambda s: s.beg)
        return cls(tuple(slots), tuple(windows))

    def to_patterns(self, grid: IntervalGrid) -> Tuple[List[Pattern], Set[int]]:
        """Split slots at interval boundaries into per-interval patterns.

        Returns:
            tuple: (patterns ordered by interval, boundaries where a slot was split)
        """
        segments: Dict[int, List[Tuple[int, int]]] = {}
        joins: Set[int] = set()
        for slot in self.slots:
            first = grid.interval_of(slot.beg)
            last = grid.end_interval_of(slot.end)
            for t in range(first, last + 1):
                points = grid.points(t)
                beg = max(slot.beg, points[0])
                end = min(slot.end, points[-1])
                segments.setdefault(t, []).append((points.index(beg), points.index(end)))
                if t < last:
                    joins.add(t)
        windows = {w.t: w for w in self.windows}
        patterns = []
        for t in sorted(set(segments) | set(windows)):
            points = grid.points(t)
            window = windows.get(t)
            segment = None if window is None else (points.index(window.a), points.index(window.b))
            patterns.append(Pattern(t, len(points) - 1, tuple(segments.get(t, [])), segment))
        return patterns, joins
