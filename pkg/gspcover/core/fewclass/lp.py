"""Due date LP for the jobs outside the expensive guess, and its rounding.

Variables x[j, t] pick a due date t for every free job j. For every release
date r and due date t >= r the jobs released in [r, t] whose due date lies
after t must carry ex([r, t]) = max(p([r, t]) - (t - r), 0) units; guessed
jobs enter these rows as constants. A pair (j, t) is only allowed when j can
finish by t, its true cost stays within the budget and its rounded cost is
at most the cheapest guessed cost.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from gspcover.core.fewclass.rounding import RoundedClassSet
from gspcover.core.lp import BasicSolution, LinearProgram, Relation
from gspcover.core.model.edd import DueDateAssignment
from gspcover.core.model.instances import Job
from gspcover.exceptions import CostUnavailableError, InvalidParameterError, RoundingError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExpensiveGuess:
    """Guessed due dates of the most expensive jobs.

    Attributes:
        pairs: (job id, due date, rounded cost) in the order they were guessed,
            costs nonincreasing and ids increasing among equal costs
    """

    pairs: Tuple[Tuple[int, int, Fraction], ...] = ()

    @property
    def job_ids(self) -> Tuple[int, ...]:
        return tuple(job_id for job_id, _, _ in self.pairs)

    @property
    def threshold(self) -> Optional[Fraction]:
        """Cheapest guessed cost c_thres, None for the empty guess."""
        return self.pairs[-1][2] if self.pairs else None

    @property
    def cost(self) -> Fraction:
        return sum((cost for _, _, cost in self.pairs), Fraction(0))

    def due_dates(self) -> Dict[int, int]:
        return {job_id: d for job_id, d, _ in self.pairs}

    def allows(self, job_id: int, cost: Fraction) -> bool:
        """Whether (job, cost) may follow the last guessed pair."""
        if not self.pairs:
            return True
        last_id, _, last_cost = self.pairs[-1]
        return cost < last_cost or (cost == last_cost and job_id > last_id)

    def extend(self, job_id: int, due_date: int, cost: Fraction) -> "ExpensiveGuess":
        if job_id in self.job_ids:
            raise InvalidParameterError(f"Job {job_id} is already guessed")
        if not self.allows(job_id, cost):
            raise InvalidParameterError("Guessed costs must be nonincreasing")
        return ExpensiveGuess(self.pairs + ((job_id, due_date, cost),))


def admissible_cost(
    job: Job, t: int, rounded: RoundedClassSet, threshold: Optional[Fraction] = None
) -> Optional[Fraction]:
    """Rounded cost of due date t for job j, or None if the pair is not allowed."""
    if t < job.r + job.p:
        return None
    try:
        true_cost = job.cost(t)
    except CostUnavailableError:
        return None
    if true_cost > rounded.budget:
        return None
    cost = rounded.job_cost(job, t)
    if cost is None or (threshold is not None and cost > threshold):
        return None
    return cost


@dataclass
class DueDateLp:
    """The LP with its variable and row bookkeeping."""

    lp: LinearProgram
    free_jobs: Tuple[Job, ...]
    due_dates: Tuple[int, ...]
    index: Dict[Tuple[int, int], int] = field(default_factory=dict)
    covering_rows: int = 0

    def support(self, job_id: int, values: Sequence[Fraction]) -> List[int]:
        return sorted(t for (j, t), var in self.index.items() if j == job_id and values[var] > 0)


def build_due_date_lp(
    jobs: Sequence[Job],
    guess: ExpensiveGuess,
    due_dates: Sequence[int],
    rounded: RoundedClassSet,
) -> DueDateLp:
    """LP over the jobs outside the guess.

    Args:
        jobs: All jobs of the instance
        guess: Expensive jobs with fixed due dates
        due_dates: Candidate due dates D
        rounded: Rounded class functions of the current budget

    Returns:
        DueDateLp: Empty (objective 0) when every job is guessed
    """
    guessed = guess.due_dates()
    free = tuple(sorted((job for job in jobs if job.id not in guessed), key=lambda job: job.id))
    lp = LinearProgram()
    model = DueDateLp(lp, free, tuple(due_dates))

    for job in free:
        for t in due_dates:
            cost = admissible_cost(job, t, rounded, guess.threshold)
            if cost is not None:
                model.index[(job.id, t)] = lp.add_variable(f"x[{job.id},{t}]", cost)

    releases = sorted({job.r for job in jobs})
    for r in releases:
        for t in due_dates:
            if t < r:
                continue
            released = [job for job in jobs if r <= job.r <= t]
            excess = max(sum(job.p for job in released) - (t - r), 0)
            if excess == 0:
                continue
            carried = sum(
                job.p for job in released if job.id in guessed and guessed[job.id] > t
            )
            need = excess - carried
            if need <= 0:
                continue
            row = {
                model.index[(job.id, later)]: job.p
                for job in released if job.id not in guessed
                for later in due_dates
                if later > t and (job.id, later) in model.index
            }
            lp.add_constraint(row, Relation.GE, need, name=f"interval[{r},{t}]")
            model.covering_rows += 1

    for job in free:
        row = {var: 1 for (j, _), var in model.index.items() if j == job.id}
        lp.add_constraint(row, Relation.EQ, 1, name=f"assign[{job.id}]")

    logger.debug(
        "due date LP: %d free jobs, %d variables, %d covering rows",
        len(free), lp.variable_count, model.covering_rows,
    )
    return model


def round_due_date_lp(model: DueDateLp, solution: BasicSolution) -> Tuple[DueDateAssignment, int]:
    """Give every free job the latest due date in its support.

    Returns:
        tuple: (due dates of the free jobs, number of jobs rounded up)

    Raises:
        RoundingError: If more jobs are split than there are covering rows
    """
    dates: Dict[int, int] = {}
    split = 0
    for job in model.free_jobs:
        support = model.support(job.id, solution.values)
        if not support:
            raise RoundingError(f"Job {job.id} has no due date in the LP solution")
        dates[job.id] = support[-1]
        if len(support) > 1:
            split += 1
    if split > model.covering_rows:
        raise RoundingError(
            f"{split} jobs are split over due dates but the LP has only "
            f"{model.covering_rows} covering rows"
        )
    return DueDateAssignment.from_mapping(dates), split


def check_rounding_bound(
    model: DueDateLp,
    guess: ExpensiveGuess,
    objective: Fraction,
    free_cost: Fraction,
    split: int,
    eps: Fraction,
) -> Fraction:
    """Verify the cost of rounding the LP vertex up to max-support due dates.

    Every rounded-up job lands on an admissible pair, so it costs at most
    c_thres while its LP share is nonnegative. Once the guess holds at least
    covering_rows / eps jobs, the slack is also at most eps times the
    guessed cost.

    Args:
        model: LP the vertex came from
        guess: Expensive jobs of the node
        objective: LP value c(x*)
        free_cost: Rounded cost of the free jobs at their new due dates
        split: Number of jobs rounded up
        eps: Accuracy parameter

    Returns:
        Fraction: The bound free_cost was checked against

    Raises:
        RoundingError: If free_cost exceeds the bound
    """
    if guess.threshold is not None:
        ceiling = guess.threshold
    else:
        ceiling = max(model.lp.objective, default=Fraction(0))
    bound = objective + split * ceiling
    if free_cost > bound:
        raise RoundingError(
            f"Rounded free cost {free_cost} exceeds LP value {objective} plus "
            f"{split} rounded jobs at {ceiling}"
        )
    if eps * len(guess.pairs) >= model.covering_rows:
        full = objective + eps * guess.cost
        if free_cost > full:
            raise RoundingError(
                f"Rounded free cost {free_cost} exceeds {objective} + {eps} * {guess.cost}"
            )
        bound = min(bound, full)
    return bound
