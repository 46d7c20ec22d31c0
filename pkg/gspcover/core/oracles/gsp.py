"""Exact GSP oracles: uniform-release permutations and due date enumeration."""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from gspcover.core.model.edd import DueDateAssignment, edd_feasible
from gspcover.core.model.instances import GspInstance, Job
from gspcover.core.model.results import DueDateSolution, ScheduleSolution
from gspcover.core.model.schedule import Schedule
from gspcover.exceptions import CostUnavailableError, InvalidParameterError
from gspcover.utils.validation.caps import (
    DEFAULT_DUE_DATE_CAP,
    DEFAULT_GSP_ORACLE_CAP,
    enforce_cap,
)

logger = logging.getLogger(__name__)


def _finite_cost(job: Job, completion: Fraction) -> Optional[Fraction]:
    try:
        return job.cost(completion)
    except CostUnavailableError:
        return None


def exact_gsp_uniform_release(
    inst: GspInstance, cap: int = DEFAULT_GSP_ORACLE_CAP
) -> Optional[ScheduleSolution]:
    """Optimal idle-free permutation schedule at unit speed.

    A dynamic program over the set S of jobs already run: the remaining
    jobs start at r + p(S), so
    H(S) = min over j not in S of f_j(r + p(S) + p_j) + H(S + j).
    This equals the minimum over all n! permutations; among optimal orders
    the lexicographically smallest id sequence is returned.

    Args:
        inst: Instance with a common release date
        cap: Largest job count accepted

    Returns:
        ScheduleSolution or None when every order hits an unavailable cost

    Raises:
        InvalidParameterError: If release dates differ
        CapExceededError: If the instance has more than cap jobs

    Example:
        >>> solution = exact_gsp_uniform_release(g1)
        >>> solution.schedule.order, solution.cost
        ((2, 1), Fraction(11, 1))
    """
    if not inst.is_uniform_release:
        raise InvalidParameterError("exact_gsp_uniform_release needs a common release date")
    enforce_cap("jobs", inst.n, cap)
    if inst.n == 0:
        return ScheduleSolution(Schedule(()), Fraction(0))

    jobs = sorted(inst.jobs, key=lambda job: job.id)
    release = jobs[0].r
    n = len(jobs)
    full = (1 << n) - 1

    volume = [0] * (full + 1)
    for mask in range(1, full + 1):
        low = mask & -mask
        volume[mask] = volume[mask ^ low] + jobs[low.bit_length() - 1].p

    best: List[Optional[Fraction]] = [None] * (full + 1)
    best[full] = Fraction(0)
    for mask in range(full - 1, -1, -1):
        start = release + volume[mask]
        value: Optional[Fraction] = None
        for index, job in enumerate(jobs):
            bit = 1 << index
            if mask & bit or best[mask | bit] is None:
                continue
            cost = _finite_cost(job, Fraction(start + job.p))
            if cost is None:
                continue
            total = cost + best[mask | bit]
            if value is None or total < value:
                value = total
        best[mask] = value

    if best[0] is None:
        return None

    order = []
    mask = 0
    while mask != full:
        start = release + volume[mask]
        for index, job in enumerate(jobs):
            bit = 1 << index
            if mask & bit or best[mask | bit] is None:
                continue
            cost = _finite_cost(job, Fraction(start + job.p))
            if cost is not None and cost + best[mask | bit] == best[mask]:
                order.append(job.id)
                mask |= bit
                break

    schedule = Schedule.from_order(inst, order)
    logger.debug("exact_gsp_uniform_release: order %s cost %s", order, best[0])
    return ScheduleSolution(schedule, best[0])


def exact_due_dates(
    inst: GspInstance, due_date_set: Iterable[int], cap: int = DEFAULT_DUE_DATE_CAP
) -> Optional[DueDateSolution]:
    """Cheapest feasible assignment of due dates drawn from a candidate set.

    Jobs are assigned in id order, due dates in increasing order; a branch
    is cut as soon as its assigned jobs fail the EDD test or its cost plus
    the cheapest admissible cost of every unassigned job cannot beat the
    incumbent.

    Args:
        inst: Instance to solve
        due_date_set: Candidate due dates D
        cap: Largest |D|^n accepted

    Returns:
        DueDateSolution or None when no assignment is feasible

    Raises:
        CapExceededError: If |D|^n exceeds cap
    """
    dates = sorted({Fraction(d) for d in due_date_set})
    enforce_cap("due date assignments", len(dates) ** inst.n, cap)
    jobs = sorted(inst.jobs, key=lambda job: job.id)

    options: Dict[int, List[tuple]] = {}
    for job in jobs:
        admissible = []
        for date in dates:
            if date < job.r + job.p:
                continue
            cost = _finite_cost(job, date)
            if cost is not None:
                admissible.append((date, cost))
        if not admissible:
            logger.debug("job %s has no admissible due date", job.id)
            return None
        options[job.id] = admissible

    cheapest_rest = [Fraction(0)] * (len(jobs) + 1)
    for index in range(len(jobs) - 1, -1, -1):
        cheapest = min(cost for _, cost in options[jobs[index].id])
        cheapest_rest[index] = cheapest_rest[index + 1] + cheapest

    best: List[Optional[DueDateSolution]] = [None]
    assigned: Dict[int, Fraction] = {}

    def search(index: int, cost: Fraction) -> None:
        if best[0] is not None and cost + cheapest_rest[index] >= best[0].cost:
            return
        if index == len(jobs):
            best[0] = DueDateSolution(DueDateAssignment.from_mapping(assigned), cost)
            return
        job = jobs[index]
        for date, job_cost in options[job.id]:
            assigned[job.id] = date
            if edd_feasible(jobs[: index + 1], assigned):
                search(index + 1, cost + job_cost)
            del assigned[job.id]

    search(0, Fraction(0))
    return best[0]
