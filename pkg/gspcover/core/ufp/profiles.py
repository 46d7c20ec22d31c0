"""Approximate unimodal profiles of a group's optimal task set.

A profile assigns each edge of a subpath a height from
H = {j * eps * g * (1+eps)^(l+1) : j = 0..floor(1/eps)}, nondecreasing up to
the middle edge and nonincreasing after it. Since every task of a group
crosses the middle edge, covering such a profile only needs checking at the
leftmost and rightmost edge reaching each height.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, floor
from typing import Iterator, List, Optional, Sequence, Tuple

from gspcover.core.model.instances import UfpTask
from gspcover.core.model.numeric import Number, to_fraction
from gspcover.core.ufp.groups import TaskGroup
from gspcover.exceptions import InvalidParameterError


def height_levels(g: int, l: int, eps: Number) -> Tuple[Fraction, ...]:
    """Distinct heights j * eps * g * (1+eps)^(l+1) for j = 0..floor(1/eps).

    Example:
        >>> height_levels(2, 0, Fraction(1, 2))
        (Fraction(0, 1), Fraction(3, 2), Fraction(3, 1))
    """
    eps = to_fraction(eps)
    if eps <= 0:
        raise InvalidParameterError("eps must be positive")
    if g < 0:
        raise InvalidParameterError(f"Guessed count must be nonnegative, got {g}")
    step = eps * g * (1 + eps) ** (l + 1)
    levels = []
    for j in range(floor(1 / eps) + 1):
        height = j * step
        if not levels or height != levels[-1]:
            levels.append(height)
    return tuple(levels)


@dataclass(frozen=True)
class ApproxProfile:
    """Unimodal staircase over edges lo..lo+len(heights)-1 peaking at middle.

    Attributes:
        heights: Height per edge of the subpath
        lo: First edge of the subpath
        middle: Peak edge
        levels: The height set H it was drawn from
        g: Guessed task count behind H
    """

    heights: Tuple[Fraction, ...]
    lo: int
    middle: int
    levels: Tuple[Fraction, ...]
    g: int

    @property
    def hi(self) -> int:
        return self.lo + len(self.heights)

    @property
    def peak(self) -> Fraction:
        return self.heights[self.middle - self.lo]

    def e_left(self, h: Fraction) -> Optional[int]:
        """Leftmost edge with height at least h."""
        for offset, height in enumerate(self.heights):
            if height >= h:
                return self.lo + offset
        return None

    def e_right(self, h: Fraction) -> Optional[int]:
        """Rightmost edge with height at least h."""
        for offset in range(len(self.heights) - 1, -1, -1):
            if self.heights[offset] >= h:
                return self.lo + offset
        return None

    def cover_rows(self) -> List[Tuple[int, Fraction]]:
        """Deduplicated (edge, height) pairs a covering set has to meet."""
        rows: List[Tuple[int, Fraction]] = []
        for h in self.levels:
            if h <= 0 or h > self.peak:
                continue
            for edge in (self.e_left(h), self.e_right(h)):
                if (edge, h) not in rows:
                    rows.append((edge, h))
        return rows


def count_approx_profiles(level_count: int, left_edges: int, right_edges: int) -> int:
    """Number of unimodal profiles: sum over peak level i of C(L+i, L) * C(R+i, R).

    Example:
        >>> count_approx_profiles(3, 1, 0)
        6
    """
    return sum(
        comb(left_edges + i, left_edges) * comb(right_edges + i, right_edges)
        for i in range(level_count)
    )


def _coverage_classes(edges: Sequence[int], key) -> List[List[int]]:
    classes: List[List[int]] = []
    previous = None
    for edge in edges:
        value = key(edge)
        if classes and value == previous:
            classes[-1].append(edge)
        else:
            classes.append([edge])
        previous = value
    return classes


def _unimodal_sequences(
    level_count: int, left: int, right: int
) -> Iterator[Tuple[Tuple[int, ...], int, Tuple[int, ...]]]:
    for peak in range(level_count):
        for rising in combinations_with_replacement(range(peak + 1), left):
            for falling in combinations_with_replacement(range(peak + 1), right):
                yield rising, peak, tuple(reversed(falling))


def enumerate_approx_profiles(
    group: TaskGroup,
    g: int,
    eps: Number,
    lo: int,
    hi: int,
    middle: int,
    compress: bool = False,
) -> Iterator[ApproxProfile]:
    """All unimodal profiles on edges lo..hi-1 peaking at middle.

    With ``compress`` the edges on each side of the middle are merged into
    classes over which the set of group tasks covering them is constant,
    and one profile per class-level staircase is produced; profiles that
    only differ inside a class give the same covering program.

    Args:
        group: Group whose tasks cross the middle edge
        g: Guessed number of tasks of the group's optimum
        eps: Accuracy parameter
        lo: First edge of the subpath
        hi: One past the last edge
        middle: Peak edge, lo <= middle < hi
        compress: Merge edges with identical covering task sets

    Yields:
        ApproxProfile: Profiles in a fixed deterministic order

    Raises:
        InvalidParameterError: If middle is outside the subpath
    """
    if not lo <= middle < hi:
        raise InvalidParameterError(f"Middle edge {middle} outside [{lo}, {hi})")
    levels = height_levels(g, group.l, eps)

    if compress:
        tasks: Sequence[UfpTask] = group.tasks
        left_classes = _coverage_classes(
            range(lo, middle + 1), lambda e: sum(1 for task in tasks if task.s <= e)
        )
        right_classes = _coverage_classes(
            range(middle, hi), lambda e: sum(1 for task in tasks if task.t > e)
        )
    else:
        left_classes = [[e] for e in range(lo, middle + 1)]
        right_classes = [[e] for e in range(middle, hi)]

    for rising, peak, falling in _unimodal_sequences(
        len(levels), len(left_classes) - 1, len(right_classes) - 1
    ):
        heights: List[Fraction] = []
        for level, cls in zip(rising + (peak,), left_classes):
            heights.extend([levels[level]] * len(cls))
        heights.extend([levels[peak]] * (len(right_classes[0]) - 1))
        for level, cls in zip(falling, right_classes[1:]):
            heights.extend([levels[level]] * len(cls))
        yield ApproxProfile(tuple(heights), lo, middle, levels, g)
