"""Geometric intervals I_t = [R_t, R_{t+1}) with R_t = (1+eps)^t and their fine grid.

Inside I_t the fine points are R_{t,k} = (1 + k * eps^4 / (4(1+eps))) * R_t for
k = 0..floor(K), K = 4(1+eps)/eps^3, closed off by R_{t+1} when K is not an
integer. Every slot and window endpoint lies on a fine point.
"""

from fractions import Fraction
from functools import lru_cache
from math import ceil, floor
from typing import Tuple

from gspcover.core.model.numeric import (
    Number,
    ceil_log,
    ceil_power,
    floor_log,
    floor_power,
    to_fraction,
)
from gspcover.exceptions import InvalidParameterError


def artificial_release(p: int, eps: Number) -> Fraction:
    """Largest power of 1+eps at most eps * p / (1+eps).

    Example:
        >>> artificial_release(12, Fraction(1, 2))
        Fraction(27, 8)
    """
    eps = to_fraction(eps)
    if p < 1:
        raise InvalidParameterError(f"Processing time must be positive, got {p}")
    if eps <= 0:
        raise InvalidParameterError("eps must be positive")
    return floor_power(eps * p / (1 + eps), 1 + eps)


def round_completion(completion: Number, eps: Number) -> Fraction:
    """Smallest power of 1+eps at least C.

    Example:
        >>> round_completion(4, Fraction(1, 2))
        Fraction(81, 16)
    """
    completion, eps = to_fraction(completion), to_fraction(eps)
    if completion <= 0:
        raise InvalidParameterError(f"Completion time must be positive, got {completion}")
    if eps <= 0:
        raise InvalidParameterError("eps must be positive")
    return ceil_power(completion, 1 + eps)


class IntervalGrid:
    """Geometric intervals and their fine grid for one eps.

    Example:
        >>> grid = IntervalGrid(Fraction(1))
        >>> len(grid.points(0))
        9
    """

    def __init__(self, eps: Number):
        eps = to_fraction(eps)
        if eps <= 0:
            raise InvalidParameterError(f"eps must be positive, got {eps}")
        self.eps = eps
        self.base = 1 + eps
        self.step = eps ** 4 / (4 * (1 + eps))
        self.k_max = 4 * (1 + eps) / eps ** 3
        self._points = lru_cache(maxsize=None)(self._compute_points)

    def start(self, t: int) -> Fraction:
        """R_t."""
        return self.base ** t

    def length(self, t: int) -> Fraction:
        """|I_t| = eps * R_t."""
        return self.eps * self.start(t)

    def interval_of(self, time: Number) -> int:
        """Index t with R_t <= time < R_{t+1}."""
        return floor_log(time, self.base)

    def end_interval_of(self, time: Number) -> int:
        """Index t with R_t < time <= R_{t+1}, for right endpoints."""
        return ceil_log(time, self.base) - 1

    def _compute_points(self, t: int) -> Tuple[Fraction, ...]:
        start = self.start(t)
        points = [(1 + k * self.step) * start for k in range(floor(self.k_max) + 1)]
        if self.k_max.denominator != 1:
            points.append(self.start(t + 1))
        return tuple(points)

    def points(self, t: int) -> Tuple[Fraction, ...]:
        """Fine points of the closed interval [R_t, R_{t+1}], increasing."""
        return self._points(t)

    def steps(self, t: int) -> int:
        """Number of fine steps in I_t."""
        return len(self.points(t)) - 1

    def snap(self, time: Number) -> Fraction:
        """Smallest fine point at or after a positive time."""
        time = to_fraction(time)
        if time <= 0:
            raise InvalidParameterError(f"Only positive times lie on the grid, got {time}")
        for point in self.points(self.interval_of(time)):
            if point >= time:
                return point
        raise InvalidParameterError(f"No grid point at or after {time}")

    def is_grid_point(self, time: Number) -> bool:
        time = to_fraction(time)
        return time > 0 and time in self.points(self.interval_of(time))

    def overflow_gap(self, t: int) -> Fraction:
        """eps * |I_t| / (1+eps), room a window of interval t may overflow into at full speed."""
        return self.length(t) * self.eps / (1 + self.eps)

    def min_slot_steps(self) -> int:
        """Fine steps in eps^3 * R_t, the shortest slot inside one interval."""
        return ceil(self.eps ** 3 / self.step)
