"""Pattern combinations: one pattern per interval plus the slots joined across boundaries.

The intervals considered run from the one holding the earliest artificial
release to the one a back-to-back, grid-snapped run of all jobs ends in.
Combinations are counted exactly before any is built, so a search that
would exceed its cap is refused up front.
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from gspcover.core.speedup.grid import IntervalGrid
from gspcover.core.speedup.layout import SlotLayout
from gspcover.core.speedup.patterns import Pattern, enumerate_patterns
from gspcover.core.speedup.slp import SpeedupJob
from gspcover.exceptions import InvalidParameterError
from gspcover.utils.validation.caps import DEFAULT_PATTERN_CAP, enforce_cap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Combination:
    """Patterns for consecutive intervals and the boundaries whose slots merge.

    Attributes:
        patterns: One pattern per interval, by increasing interval
        joins: Intervals t whose closing slot continues into t + 1
    """

    patterns: Tuple[Pattern, ...]
    joins: FrozenSet[int] = frozenset()

    @property
    def slot_count(self) -> int:
        return sum(len(pattern.slots) for pattern in self.patterns) - len(self.joins)

    def layout(self, grid: IntervalGrid) -> SlotLayout:
        return SlotLayout.from_patterns(self.patterns, grid, self.joins)


def interval_span(jobs: Sequence[SpeedupJob], grid: IntervalGrid) -> Tuple[int, int]:
    """First and last interval a layout for the jobs needs.

    Raises:
        InvalidParameterError: If there are no jobs
    """
    if not jobs:
        raise InvalidParameterError("An interval span needs at least one job")
    first = grid.interval_of(min(job.release for job in jobs))
    work = max(job.release for job in jobs) + sum((job.q for job in jobs), Fraction(0))
    # each job snaps its start and its end once
    latest = work * (1 + grid.step) ** (2 * len(jobs))
    return first, max(first, grid.end_interval_of(latest))


def _edges(pattern: Pattern) -> Tuple[int, bool, bool]:
    return len(pattern.slots), pattern.opens_with_slot, pattern.closes_with_slot


def _join_options(previous_closes: bool, opens: bool) -> Tuple[bool, ...]:
    return (False, True) if previous_closes and opens else (False,)


def count_combinations(per_interval: Sequence[Sequence[Pattern]], max_slots: int) -> int:
    """Number of combinations with at most max_slots slots after joining.

    Example:
        >>> count_combinations([enumerate_patterns(0, 1)], 0)
        37
    """
    states: Dict[Tuple[int, bool], int] = {(0, False): 1}
    for patterns in per_interval:
        shapes = Counter(_edges(pattern) for pattern in patterns)
        following: Dict[Tuple[int, bool], int] = defaultdict(int)
        for (used, closes), ways in states.items():
            for (slots, opens, closes_next), count in shapes.items():
                for join in _join_options(closes, opens):
                    total = used + slots - join
                    if total <= max_slots:
                        following[(total, closes_next)] += ways * count
        states = following
    return sum(states.values())


def iter_combinations(
    per_interval: Sequence[Sequence[Pattern]], max_slots: int
) -> Iterator[Combination]:
    """Every combination counted by count_combinations, in scan order."""

    def walk(
        index: int, chosen: Tuple[Pattern, ...], joins: FrozenSet[int], used: int, closes: bool
    ) -> Iterator[Combination]:
        if index == len(per_interval):
            yield Combination(chosen, joins)
            return
        for pattern in per_interval[index]:
            slots, opens, closes_next = _edges(pattern)
            for join in _join_options(closes, opens):
                total = used + slots - join
                if total > max_slots:
                    continue
                merged = joins | {pattern.t - 1} if join else joins
                yield from walk(index + 1, chosen + (pattern,), merged, total, closes_next)

    return walk(0, (), frozenset(), 0, False)


def enumerate_combinations(
    jobs: Sequence[SpeedupJob], grid: IntervalGrid, cap: int = DEFAULT_PATTERN_CAP
) -> Tuple[int, Iterator[Combination]]:
    """All pattern combinations over the jobs' interval span.

    Args:
        jobs: Jobs in the LP frame
        grid: Interval grid
        cap: Largest number of patterns per interval and of combinations

    Returns:
        tuple: (number of combinations, iterator over them)

    Raises:
        CapExceededError: If an interval has more than cap patterns or the
            span has more than cap combinations
    """
    first, last = interval_span(jobs, grid)
    originals = [job.job for job in jobs]
    per_interval: List[List[Pattern]] = [
        enumerate_patterns(t, grid.eps, originals, cap) for t in range(first, last + 1)
    ]
    total = count_combinations(per_interval, len(jobs))
    enforce_cap("pattern combinations", total, cap)
    logger.debug(
        "intervals %d..%d: %d patterns, %d combinations",
        first, last, sum(len(patterns) for patterns in per_interval), total,
    )
    return total, iter_combinations(per_interval, len(jobs))
