"""Seeded random instances.

Both generators draw from ``numpy.random.default_rng(seed)`` only, so a seed
and a parameter set always give the same instance.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from gspcover.core.model.instances import GspInstance, UfpCoverInstance, UfpTask, class_job
from gspcover.core.model.profile import induced_heights
from gspcover.core.model.step import StepCostFunction
from gspcover.exceptions import InvalidParameterError

Range = Tuple[int, int]


def _check_range(name: str, bounds: Range, low: int) -> None:
    if len(bounds) != 2 or bounds[0] < low or bounds[1] < bounds[0]:
        raise InvalidParameterError(f"{name} must be a range [a, b] with {low} <= a <= b, got {bounds}")


def _draw(rng: np.random.Generator, bounds: Range) -> int:
    return int(rng.integers(bounds[0], bounds[1] + 1))


def generate_ufp_with_cover(
    seed: int,
    n: int,
    m: int,
    demand_range: Range = (1, 6),
    size_range: Range = (1, 4),
    cost_range: Range = (1, 10),
) -> Tuple[UfpCoverInstance, Tuple[str, ...]]:
    """A UFP-cover instance together with the cover planted in it.

    Tasks get random paths, sizes and integral costs. About half of them
    form the planted cover, and each edge's demand is a draw from
    demand_range lowered to the planted profile, so the planted set is
    always feasible.

    Returns:
        tuple: (instance, ids of the planted tasks)

    Raises:
        InvalidParameterError: If n < 0, m < 1 or a range is not positive
    """
    if n < 0 or m < 1:
        raise InvalidParameterError(f"Need n >= 0 and m >= 1, got n={n}, m={m}")
    _check_range("demand_range", demand_range, 0)
    _check_range("size_range", size_range, 1)
    _check_range("cost_range", cost_range, 0)

    rng = np.random.default_rng(seed)
    tasks: List[UfpTask] = []
    for i in range(n):
        s = int(rng.integers(0, m))
        t = int(rng.integers(s + 1, m + 1))
        tasks.append(UfpTask(f"t{i:02d}", s, t, _draw(rng, size_range), Fraction(_draw(rng, cost_range))))
    planted = [task for task in tasks if rng.random() < 0.5]
    if tasks and not planted:
        planted = [tasks[int(rng.integers(0, len(tasks)))]]

    heights = induced_heights(planted, 0, m)
    demands = tuple(min(int(heights[e]), _draw(rng, demand_range)) for e in range(m))
    instance = UfpCoverInstance(m, demands, tuple(tasks))
    return instance, tuple(sorted(task.id for task in planted))


def generate_ufp(
    seed: int,
    n: int,
    m: int,
    demand_range: Range = (1, 6),
    size_range: Range = (1, 4),
    cost_range: Range = (1, 10),
) -> UfpCoverInstance:
    """Feasible random UFP-cover instance (see generate_ufp_with_cover).

    Example:
        >>> generate_ufp(7, 6, 4) == generate_ufp(7, 6, 4)
        True
    """
    return generate_ufp_with_cover(seed, n, m, demand_range, size_range, cost_range)[0]


def random_step_function(rng: np.random.Generator, horizon: int, max_step: int = 3) -> StepCostFunction:
    """Nondecreasing function sampled at 0..horizon, 0 at time 0."""
    increments = rng.integers(0, max_step + 1, size=horizon)
    values = [0] + np.cumsum(increments).tolist()
    return StepCostFunction.from_samples(values)


def generate_gsp(
    seed: int,
    n: int,
    k: int = 2,
    releases: Sequence[int] = (0,),
    weight_bound: int = 3,
    size_range: Range = (1, 4),
    horizon: Optional[int] = None,
) -> GspInstance:
    """Random instance in class form f_j = w_j * g_{u(j)}.

    Args:
        seed: Random seed
        n: Number of jobs
        k: Number of class functions
        releases: Release dates jobs are drawn from
        weight_bound: W, weights are drawn from 1..W
        size_range: Processing times
        horizon: Last sampled time of the class functions; long enough for
            any idle-free schedule by default

    Raises:
        InvalidParameterError: If k < 1, n < 0 or no release dates are given
    """
    if k < 1:
        raise InvalidParameterError(f"Need at least one class function, got k={k}")
    if n < 0:
        raise InvalidParameterError(f"Job count must be nonnegative, got {n}")
    if not releases or min(releases) < 0:
        raise InvalidParameterError("Release dates must be a nonempty list of nonnegative integers")
    if weight_bound < 1:
        raise InvalidParameterError(f"Weight bound must be positive, got {weight_bound}")
    _check_range("size_range", size_range, 1)

    rng = np.random.default_rng(seed)
    if horizon is None:
        horizon = max(releases) + max(n, 1) * size_range[1]
    functions = [random_step_function(rng, horizon) for _ in range(k)]
    jobs = []
    for job_id in range(1, n + 1):
        r = int(rng.choice(np.asarray(releases)))
        jobs.append(class_job(
            job_id, _draw(rng, size_range), r, int(rng.integers(0, k)),
            int(rng.integers(1, weight_bound + 1)), functions,
        ))
    return GspInstance(tuple(jobs), tuple(functions), weight_bound)
