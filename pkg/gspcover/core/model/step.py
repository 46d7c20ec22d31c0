"""Right-continuous nondecreasing step cost functions."""

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from gspcover.core.model.numeric import Number, to_fraction
from gspcover.exceptions import CostUnavailableError, InvalidInstanceError, InvalidParameterError

Breakpoint = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class StepCostFunction:
    """Nondecreasing step function over nonnegative time.
    
    The function is 0 before its first breakpoint and takes the value of
    the last breakpoint at or before t otherwise. A function may carry an
    ``unavailable_after`` bound: evaluating strictly past it raises
    CostUnavailableError, which is how an infinite cost is represented.
    
    Attributes:
        breakpoints: (time, value) pairs, times strictly increasing
        unavailable_after: Last time with a finite value, or None
    """
    
    breakpoints: Tuple[Breakpoint, ...] = ()
    unavailable_after: Optional[Fraction] = None
    _times: Tuple[Fraction, ...] = field(default=(), init=False, repr=False, compare=False)
    
    def __post_init__(self) -> None:
        points = tuple((to_fraction(t), to_fraction(v)) for t, v in self.breakpoints)
        previous_time: Optional[Fraction] = None
        previous_value = Fraction(0)
        for time, value in points:
            if time < 0 or value < 0:
                raise InvalidInstanceError(f"Breakpoint ({time}, {value}) must be nonnegative")
            if previous_time is not None and time <= previous_time:
                raise InvalidInstanceError("Breakpoint times must be strictly increasing")
            if value < previous_value:
                raise InvalidInstanceError("Breakpoint values must be nondecreasing")
            previous_time, previous_value = time, value
        object.__setattr__(self, "breakpoints", points)
        object.__setattr__(self, "_times", tuple(t for t, _ in points))
        if self.unavailable_after is not None:
            object.__setattr__(self, "unavailable_after", to_fraction(self.unavailable_after))
    
    # ── Construction helpers ──────────────────────────────────────
    
    @classmethod
    def zero(cls) -> "StepCostFunction":
        """The constant-zero function."""
        return cls(())
    
    @classmethod
    def constant(cls, value: Number) -> "StepCostFunction":
        """Constant function jumping to value at time 0."""
        return cls(((0, value),))
    
    @classmethod
    def from_samples(cls, values: Sequence[Number], start: int = 0) -> "StepCostFunction":
        """Build a step function from values sampled at consecutive integer times.
        
        Only the samples where the value changes become breakpoints.
        
        Args:
            values: Value at times start, start+1, ...
            start: Time of the first sample
            
        Example:
            >>> f = StepCostFunction.from_samples([0, 1, 2, 3])
            >>> f.breakpoints[-1]
            (Fraction(3, 1), Fraction(3, 1))
        """
        points: List[Tuple[int, Number]] = []
        previous: Optional[Fraction] = None
        for offset, raw in enumerate(values):
            value = to_fraction(raw)
            if value != previous and not (previous is None and value == 0 and start == 0):
                points.append((start + offset, value))
            previous = value
        return cls(tuple(points))
    
    @classmethod
    def linear(cls, slope: Number, horizon: int) -> "StepCostFunction":
        """slope * t sampled at integer times 0..horizon."""
        slope = to_fraction(slope)
        return cls.from_samples([slope * t for t in range(horizon + 1)])
    
    # ── Queries ───────────────────────────────────────────────────
    
    def value_at(self, t: Number) -> Fraction:
        """Evaluate the function at time t (see eval_step)."""
        t = to_fraction(t)
        if t < 0:
            raise InvalidParameterError(f"Cost functions are defined for t >= 0, got {t}")
        if self.unavailable_after is not None and t > self.unavailable_after:
            raise CostUnavailableError(f"Cost unavailable at time {t}")
        index = bisect_right(self._times, t)
        if index == 0:
            return Fraction(0)
        return self.breakpoints[index - 1][1]
    
    def is_available(self, t: Number) -> bool:
        """True when the function has a finite value at t."""
        return self.unavailable_after is None or to_fraction(t) <= self.unavailable_after
    
    def increase_points(self) -> Tuple[Fraction, ...]:
        """Times at which the value strictly increases."""
        points = []
        previous = Fraction(0)
        for time, value in self.breakpoints:
            if value > previous:
                points.append(time)
            previous = value
        return tuple(points)
    
    def values(self) -> Tuple[Fraction, ...]:
        """Distinct values attained, in increasing order (0 included when attained)."""
        seen = []
        if not self.breakpoints or self.breakpoints[0][0] > 0:
            seen.append(Fraction(0))
        for _, value in self.breakpoints:
            if not seen or value != seen[-1]:
                seen.append(value)
        return tuple(seen)
    
    def max_value(self) -> Fraction:
        """Value of the last plateau."""
        return self.breakpoints[-1][1] if self.breakpoints else Fraction(0)
    
    def scaled(self, weight: Number) -> "StepCostFunction":
        """Pointwise product with a nonnegative weight."""
        weight = to_fraction(weight)
        if weight < 0:
            raise InvalidParameterError("Weights must be nonnegative")
        points = tuple((t, weight * v) for t, v in self.breakpoints)
        return StepCostFunction(points, self.unavailable_after)
    
    def mapped(self, transform) -> "StepCostFunction":
        """Apply a nondecreasing value transform, merging equal neighbours."""
        points: List[Breakpoint] = []
        for time, value in self.breakpoints:
            new_value = transform(value)
            if points and points[-1][1] == new_value:
                continue
            if not points and new_value == 0 and time > 0:
                continue
            points.append((time, new_value))
        return StepCostFunction(tuple(points), self.unavailable_after)


def eval_step(f: StepCostFunction, t: Number) -> Fraction:
    """Value of a step function at time t (right-continuous).
    
    Args:
        f: Step cost function
        t: Nonnegative time
        
    Returns:
        Fraction: f(t)
        
    Raises:
        CostUnavailableError: If t lies past f's unavailable-after bound
        
    Example:
        >>> f = StepCostFunction(((0, 0), (3, 5)))
        >>> eval_step(f, 2), eval_step(f, 3)
        (Fraction(0, 1), Fraction(5, 1))
    """
    return f.value_at(t)


def merged_increase_points(functions: Iterable[StepCostFunction]) -> Tuple[Fraction, ...]:
    """Sorted union of the increase points of several functions."""
    points = set()
    for f in functions:
        points.update(f.increase_points())
    return tuple(sorted(points))
