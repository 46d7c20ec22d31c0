"""Rounding of the class functions g_1..g_k against a budget B.

With floor value F = eps * B / (n * W) a class value v becomes
    0                          if v = 0
    F                          if 0 < v <= F
    min((1+eps)^ceil(log v), B) otherwise
so every rounded function takes O(log_{1+eps}(n W / eps)) distinct values.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence, Tuple

from gspcover.core.model.instances import Job
from gspcover.core.model.numeric import Number, ceil_log, ceil_power, to_fraction
from gspcover.core.model.step import StepCostFunction, merged_increase_points
from gspcover.exceptions import CostUnavailableError, InvalidParameterError, RoundingError


def floor_value(budget: Number, weight_bound: int, n: int, eps: Number) -> Fraction:
    """eps * B / (n * W)."""
    return to_fraction(eps) * to_fraction(budget) / (n * weight_bound)


def round_value(value: Number, budget: Number, weight_bound: int, n: int, eps: Number) -> Fraction:
    """Round one class value.

    Example:
        >>> round_value(Fraction(3, 10), 100, 8, 10, Fraction(1, 2))
        Fraction(5, 8)
        >>> round_value(7, 100, 8, 10, Fraction(1, 2))
        Fraction(243, 32)
        >>> round_value(200, 100, 8, 10, Fraction(1, 2))
        Fraction(100, 1)
    """
    value, budget, eps = to_fraction(value), to_fraction(budget), to_fraction(eps)
    if value == 0:
        return Fraction(0)
    floor = floor_value(budget, weight_bound, n, eps)
    if value <= floor:
        return floor
    return min(ceil_power(value, 1 + eps), budget)


@dataclass(frozen=True)
class RoundedClassSet:
    """Rounded class functions for one budget.

    Attributes:
        functions: Rounded g_1..g_k
        originals: The class functions they were rounded from
        budget: Budget B
        floor: Floor value eps * B / (n * W)
        eps: Accuracy parameter
        weight_bound: W
        n: Number of jobs
    """

    functions: Tuple[StepCostFunction, ...]
    originals: Tuple[StepCostFunction, ...]
    budget: Fraction
    floor: Fraction
    eps: Fraction
    weight_bound: int
    n: int

    @property
    def k(self) -> int:
        return len(self.functions)

    def job_cost(self, job: Job, time: Number) -> Optional[Fraction]:
        """w_j * rounded g_{u(j)}(time), None where the cost is unavailable."""
        try:
            return job.w * self.functions[job.u].value_at(time)
        except CostUnavailableError:
            return None

    def distinct_value_bound(self) -> int:
        """Largest number of increases a single rounded function can have."""
        return ceil_log(self.n * self.weight_bound / self.eps, 1 + self.eps) + 2


def round_class_functions(
    functions: Sequence[StepCostFunction],
    budget: Number,
    weight_bound: int,
    n: int,
    eps: Number,
) -> RoundedClassSet:
    """Round every class function against budget B.

    Args:
        functions: Class functions g_1..g_k
        budget: B > 0
        weight_bound: W >= every job weight
        n: Number of jobs
        eps: Accuracy parameter

    Returns:
        RoundedClassSet

    Raises:
        InvalidParameterError: If B, W, n or eps is not positive
    """
    budget, eps = to_fraction(budget), to_fraction(eps)
    if budget <= 0:
        raise InvalidParameterError(f"Budget must be positive, got {budget}")
    if eps <= 0:
        raise InvalidParameterError(f"eps must be positive, got {eps}")
    if weight_bound < 1 or n < 1:
        raise InvalidParameterError("Weight bound and job count must be positive")

    rounded = tuple(
        g.mapped(lambda v: round_value(v, budget, weight_bound, n, eps)) for g in functions
    )
    return RoundedClassSet(
        rounded,
        tuple(functions),
        budget,
        floor_value(budget, weight_bound, n, eps),
        eps,
        weight_bound,
        n,
    )


def due_date_candidates(rounded: RoundedClassSet) -> Tuple[Fraction, ...]:
    """Times at which some rounded class function increases.

    Raises:
        RoundingError: If there are more than k * (ceil(log_{1+eps}(W n / eps)) + 2)
    """
    points = merged_increase_points(rounded.functions)
    limit = rounded.k * rounded.distinct_value_bound()
    if len(points) > limit:
        raise RoundingError(f"{len(points)} due date candidates exceed the bound {limit}")
    return points


def solver_due_dates(
    rounded: RoundedClassSet, jobs: Sequence[Job], horizon: int
) -> Tuple[int, ...]:
    """Integral due dates the solver chooses from.

    A job finishing before an increase point b costs the same at the last
    integral time before b, so that time replaces b. Added are the last
    time each job stays within the budget or available, and the horizon.
    Times before the earliest possible completion are dropped.
    """
    times = {ceil(b) - 1 for b in due_date_candidates(rounded)}
    times.add(horizon)
    for job in jobs:
        f = job.f
        if f.unavailable_after is not None:
            times.add(int(f.unavailable_after // 1))
        for time, value in f.breakpoints:
            if value > rounded.budget:
                times.add(ceil(time) - 1)
                break
    if not jobs:
        return ()
    earliest = min(job.r + job.p for job in jobs)
    return tuple(sorted(t for t in times if earliest <= t <= horizon))
