"""Per-interval patterns: large-job slots and at most one small-job window.

Segments are given as fine-step index ranges [a, b) of one interval. A slot
strictly inside the interval spans at least eps^3 * R_t; slots touching an
interval boundary may be shorter since they continue into the neighbour.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from gspcover.core.model.instances import Job
from gspcover.core.model.numeric import Number
from gspcover.core.speedup.grid import IntervalGrid
from gspcover.utils.validation.caps import DEFAULT_PATTERN_CAP, enforce_cap

Segment = Tuple[int, int]


@dataclass(frozen=True)
class Pattern:
    """Layout of one interval.

    Attributes:
        t: Interval index
        steps: Number of fine steps of the interval
        slots: Slot segments, left to right
        window: Small-job window segment, if any
    """

    t: int
    steps: int
    slots: Tuple[Segment, ...] = ()
    window: Optional[Segment] = None

    def slot_times(self, grid: IntervalGrid) -> List[Tuple]:
        points = grid.points(self.t)
        return [(points[a], points[b]) for a, b in self.slots]

    def window_times(self, grid: IntervalGrid) -> Optional[Tuple]:
        if self.window is None:
            return None
        points = grid.points(self.t)
        return (points[self.window[0]], points[self.window[1]])

    def touches_start(self, segment: Segment) -> bool:
        return segment[0] == 0

    def touches_end(self, segment: Segment) -> bool:
        return segment[1] == self.steps

    @property
    def opens_with_slot(self) -> bool:
        """First slot starts at R_t."""
        return bool(self.slots) and self.touches_start(self.slots[0])

    @property
    def closes_with_slot(self) -> bool:
        """Last slot ends at R_{t+1}."""
        return bool(self.slots) and self.touches_end(self.slots[-1])


def _slot_allowed(pos: int, length: int, steps: int, min_len: int) -> bool:
    return length >= min_len or pos == 0 or pos + length == steps


def count_patterns(steps: int, min_len: int, max_slots: Optional[int] = None) -> int:
    """Number of patterns over an interval with the given number of fine steps.

    Scans positions left to right; at each position the step is either
    idle, the start of a slot or the start of the (single) window.

    Example:
        >>> count_patterns(1, 1)
        3
    """
    limit = steps if max_slots is None else max_slots

    @lru_cache(maxsize=None)
    def count(pos: int, window_used: bool, slots: int) -> int:
        if pos == steps:
            return 1
        total = count(pos + 1, window_used, slots)
        for length in range(1, steps - pos + 1):
            if slots < limit and _slot_allowed(pos, length, steps, min_len):
                total += count(pos + length, window_used, slots + 1)
            if not window_used:
                total += count(pos + length, True, slots)
        return total

    return count(0, False, 0)


def _generate(
    steps: int, min_len: int, limit: int
) -> Iterator[Tuple[Tuple[Segment, ...], Optional[Segment]]]:
    def walk(pos: int, slots: Tuple[Segment, ...], window: Optional[Segment]):
        if pos == steps:
            yield slots, window
            return
        yield from walk(pos + 1, slots, window)
        for length in range(1, steps - pos + 1):
            if len(slots) < limit and _slot_allowed(pos, length, steps, min_len):
                yield from walk(pos + length, slots + ((pos, pos + length),), window)
            if window is None:
                yield from walk(pos + length, slots, (pos, pos + length))

    return walk(0, (), None)


def enumerate_patterns(
    t: int,
    eps: Number,
    jobs: Optional[Sequence[Job]] = None,
    cap: int = DEFAULT_PATTERN_CAP,
) -> List[Pattern]:
    """All patterns of interval t.

    The count depends on eps only, never on t, since the fine grid scales
    with R_t. Passing jobs limits the number of slots to the job count.

    Args:
        t: Interval index
        eps: Accuracy parameter
        jobs: Jobs the patterns are meant for
        cap: Largest pattern count accepted

    Returns:
        list: Patterns in scan order (the empty pattern first)

    Raises:
        CapExceededError: If the pattern count exceeds cap
    """
    grid = IntervalGrid(eps)
    steps = grid.steps(t)
    min_len = grid.min_slot_steps()
    limit = steps if jobs is None else len(jobs)
    enforce_cap("patterns", count_patterns(steps, min_len, limit), cap)
    return [
        Pattern(t, steps, slots, window)
        for slots, window in _generate(steps, min_len, limit)
    ]
