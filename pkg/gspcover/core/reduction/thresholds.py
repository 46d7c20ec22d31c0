"""Threshold times of the geometric cost rounding."""

from fractions import Fraction
from typing import List, Optional, Tuple

from gspcover.core.model.instances import Job
from gspcover.core.model.numeric import Number, exceeds_power, floor_log, to_fraction
from gspcover.exceptions import CostUnavailableError, InvalidParameterError


def _sample(job: Job, horizon: int) -> List[Tuple[int, Optional[Fraction]]]:
    samples = []
    for t in range(job.p, horizon + 1):
        try:
            samples.append((t, job.cost(t)))
        except CostUnavailableError:
            samples.append((t, None))
    return samples


def threshold_times(job: Job, gamma: Number, alpha: Number, horizon: int) -> Tuple[int, ...]:
    """Times at which the job's cost first exceeds each level gamma^(i-1+z+alpha).

    Completion times range over p_j..P. The offset z = min(0, floor log of
    the cheapest positive cost) lets levels start below 1 for fractional
    costs. An unavailable cost counts as exceeding every level, and the
    first time with a positive cost is kept as its own threshold so that
    zero-cost completions stay free.

    Args:
        job: Job whose cost function is rounded
        gamma: Rounding base > 1
        alpha: Offset in [0, 1)
        horizon: P, at least the job's processing time

    Returns:
        tuple: 0 = t_0 < t_1 < ... < t_k = P + 1

    Example:
        >>> threshold_times(Job(1, 1, f=StepCostFunction.linear(1, 8)), DEFAULT_GAMMA, 0, 8)
        (0, 2, 3, 8, 9)
    """
    gamma, alpha = to_fraction(gamma), to_fraction(alpha)
    if gamma <= 1:
        raise InvalidParameterError(f"gamma must exceed 1, got {gamma}")
    if horizon < job.p:
        raise InvalidParameterError(f"Horizon {horizon} is shorter than job {job.id}")

    samples = _sample(job, horizon)
    times = {0, horizon + 1}
    positive = [value for _, value in samples if value is not None and value > 0]

    if positive:
        offset = min(0, floor_log(min(positive), gamma))
        top = max(positive)
        exponent = offset + alpha
        while True:
            crossing = next(
                (
                    t for t, value in samples
                    if value is None or exceeds_power(value, gamma, exponent)
                ),
                None,
            )
            if crossing is None:
                break
            times.add(crossing)
            if not exceeds_power(top, gamma, exponent):
                break
            exponent += 1

    first_paid = next((t for t, value in samples if value is None or value > 0), None)
    if first_paid is not None and first_paid > job.p:
        times.add(first_paid)
    return tuple(sorted(times))
