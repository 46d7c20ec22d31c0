"""Few-class scheduling: budget search, expensive-job guessing, LP rounding.

For a budget B the class functions are rounded, the due dates of the most
expensive jobs are guessed and the remaining jobs get their due dates from
a rounded LP vertex. Budgets are tried in increasing order; the first one
whose best candidate costs at most (1+2eps)(1+eps) B wins. The due dates
are then realized by preemptive EDD.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from gspcover.core.fewclass.lp import (
    ExpensiveGuess,
    admissible_cost,
    build_due_date_lp,
    check_rounding_bound,
    round_due_date_lp,
)
from gspcover.core.fewclass.rounding import RoundedClassSet, round_class_functions, solver_due_dates
from gspcover.core.lp import solve_to_basic_optimum
from gspcover.core.model.edd import DueDateAssignment, EddTrace, edd_feasible, edd_simulate
from gspcover.core.model.instances import GspInstance, Job
from gspcover.core.model.numeric import Number, ceil_log, floor_log, to_fraction
from gspcover.core.model.schedule import Schedule
from gspcover.exceptions import CostUnavailableError, InvalidParameterError, RoundingError
from gspcover.utils.validation.caps import DEFAULT_GUESS_CAP, enforce_cap

logger = logging.getLogger(__name__)

DEFAULT_RELEASE_DATE_CAP = 8


def fewclass_guarantee(eps: Number) -> Fraction:
    """(1+2eps)(1+eps)(1+eps).

    Example:
        >>> fewclass_guarantee(Fraction(1, 2))
        Fraction(9, 2)
    """
    eps = to_fraction(eps)
    return (1 + 2 * eps) * (1 + eps) * (1 + eps)


def acceptance_bound(budget: Fraction, eps: Fraction) -> Fraction:
    """Largest rounded cost accepted for budget B: (1+2eps)(1+eps) B."""
    return (1 + 2 * eps) * (1 + eps) * budget


@dataclass(frozen=True)
class FewClassResult:
    """Due dates found by the budget search.

    Attributes:
        assignment: Due date per job, EDD-feasible
        cost: sum_j of rounded costs at the due dates
        true_cost: sum_j f_j(d_j)
        completion_cost: sum_j f_j(C_j) of the EDD trace
        budget: Accepted budget (the largest tried when none was accepted)
        accepted: True when the cost met the budget's acceptance bound
        guarantee: Ratio bound reported with the run
        trace: Preemptive EDD trace realizing the due dates
        schedule: Nonpreemptive schedule when the trace has no preemption
        stats: Search counters summed over all budgets
    """

    assignment: DueDateAssignment
    cost: Fraction
    true_cost: Fraction
    completion_cost: Fraction
    budget: Fraction
    accepted: bool
    guarantee: Fraction
    trace: EddTrace
    schedule: Optional[Schedule]
    stats: Dict[str, int] = field(default_factory=dict, compare=False)


@dataclass
class _Candidate:
    dates: Dict[int, int]
    cost: Fraction


class _GuessSearch:
    """Branch and bound over expensive guesses for one budget.

    A node's bound is its guessed cost plus its LP value: every descendant's
    free jobs form a feasible point of the node's LP, so no descendant can
    do better.
    """

    def __init__(
        self,
        jobs: Sequence[Job],
        due_dates: Sequence[int],
        rounded: RoundedClassSet,
        target: Fraction,
        cap: int,
        stats: Dict[str, int],
    ):
        self.jobs = sorted(jobs, key=lambda job: job.id)
        self.due_dates = tuple(due_dates)
        self.rounded = rounded
        self.target = target
        self.cap = cap
        self.stats = stats
        releases = len({job.r for job in jobs})
        self.depth = min(len(self.jobs), int(len(self.due_dates) * releases / rounded.eps))
        self.best: Optional[_Candidate] = None
        self.nodes = 0
        self.cap_hit = False

    def _bar(self) -> Fraction:
        if self.best is None:
            return self.target
        return min(self.target, self.best.cost)

    def _done(self) -> bool:
        return self.cap_hit or (self.best is not None and self.best.cost <= self.target)

    def run(self) -> Optional[_Candidate]:
        self._visit(ExpensiveGuess())
        if self.cap_hit:
            self.stats["guess_cap_hits"] += 1
            logger.warning("guess search for B=%s stopped after %d nodes", self.rounded.budget, self.cap)
        return self.best

    def _visit(self, guess: ExpensiveGuess) -> None:
        if self._done():
            return
        if self.nodes >= self.cap:
            self.cap_hit = True
            return
        self.nodes += 1
        self.stats["guesses"] += 1

        guessed = guess.due_dates()
        if guessed and not edd_feasible(
            [job for job in self.jobs if job.id in guessed], guessed
        ):
            return
        model = build_due_date_lp(self.jobs, guess, self.due_dates, self.rounded)
        self.stats["lp_solves"] += 1
        solution = solve_to_basic_optimum(model.lp)
        if not solution.is_optimal:
            return
        bound = guess.cost + solution.objective
        if bound > self._bar():
            return

        free_dates, split = round_due_date_lp(model, solution)
        dates = dict(guessed)
        dates.update(free_dates.as_dict())
        free_cost = sum(
            (self.rounded.job_cost(job, dates[job.id]) for job in model.free_jobs), Fraction(0)
        )
        check_rounding_bound(
            model, guess, solution.objective, free_cost, split, self.rounded.eps
        )
        self.stats["rounding_checks"] += 1
        if not edd_feasible(self.jobs, dates):
            raise RoundingError(f"Rounded due dates {dates} are not EDD-feasible")
        total = guess.cost + free_cost
        if self.best is None or total < self.best.cost:
            self.best = _Candidate(dates, total)

        if len(guess.pairs) >= self.depth:
            return
        for job_id, t, cost in self._children(guess):
            if self._done():
                return
            if guess.cost + cost > self._bar():
                continue
            self._visit(guess.extend(job_id, t, cost))

    def _children(self, guess: ExpensiveGuess) -> List[Tuple[int, int, Fraction]]:
        taken = set(guess.job_ids)
        children = []
        for job in self.jobs:
            if job.id in taken:
                continue
            for t in self.due_dates:
                cost = admissible_cost(job, t, self.rounded)
                if cost is not None and guess.allows(job.id, cost):
                    children.append((job.id, t, cost))
        children.sort(key=lambda child: (-child[2], child[0], child[1]))
        return children


def _true_cost(jobs: Sequence[Job], dates: Dict[int, Fraction]) -> Optional[Fraction]:
    total = Fraction(0)
    for job in jobs:
        try:
            total += job.cost(dates[job.id])
        except CostUnavailableError:
            return None
    return total


def _zero_cost_dates(inst: GspInstance) -> Optional[Dict[int, int]]:
    """Latest zero-cost due date per job, if those dates are feasible."""
    dates = {}
    for job in inst.jobs:
        increases = job.f.increase_points()
        last = inst.horizon if not increases else int(-(-increases[0] // 1)) - 1
        if job.f.unavailable_after is not None:
            last = min(last, int(job.f.unavailable_after // 1))
        if last < job.r + job.p:
            return None
        dates[job.id] = min(last, inst.horizon)
    return dates if edd_feasible(inst.jobs, dates) else None


def budget_grid(inst: GspInstance, eps: Fraction) -> List[Fraction]:
    """Powers of 1+eps from the largest single-job minimum cost up to the sum of maximum costs."""
    base = 1 + eps
    horizon = inst.horizon
    lows, highs = [], []
    for job in inst.jobs:
        values = []
        for t in range(job.r + job.p, horizon + 1):
            try:
                values.append(job.cost(t))
            except CostUnavailableError:
                break
        if values:
            lows.append(values[0])
            highs.append(values[-1])
    positive = [v for job in inst.jobs for v in job.f.values() if v > 0]
    if not positive:
        return []
    low = max(lows) if lows and max(lows) > 0 else min(positive)
    high = max(sum(highs), low)
    return [base ** i for i in range(floor_log(low, base), ceil_log(high, base) + 1)]


def _tighten(
    inst: GspInstance,
    dates: Dict[int, int],
    due_dates: Sequence[int],
    rounded: RoundedClassSet,
) -> Dict[int, int]:
    """Move due dates earlier while the rounded cost does not grow and EDD stays feasible."""
    dates = dict(dates)
    for job in sorted(inst.jobs, key=lambda job: job.id):
        current = rounded.job_cost(job, dates[job.id])
        for t in due_dates:
            if t >= dates[job.id]:
                break
            cost = admissible_cost(job, t, rounded)
            if cost is None or cost > current:
                continue
            trial = dict(dates)
            trial[job.id] = t
            if edd_feasible(inst.jobs, trial):
                dates = trial
                break
    return dates


def _result(
    inst: GspInstance,
    dates: Dict[int, int],
    cost: Fraction,
    budget: Fraction,
    accepted: bool,
    eps: Fraction,
    stats: Dict[str, int],
) -> FewClassResult:
    assignment = DueDateAssignment.from_mapping(dates)
    trace = edd_simulate(inst.jobs, assignment)
    if not trace.feasible:
        raise RoundingError("Final due dates are not EDD-feasible")
    completions = dict(trace.completions)
    completion_cost = sum(
        (job.cost(completions[job.id]) for job in inst.jobs), Fraction(0)
    )
    schedule = None
    if not trace.is_preemptive:
        schedule = Schedule(tuple((segment.job_id, segment.start) for segment in trace.segments))
    true_cost = _true_cost(inst.jobs, assignment.as_dict())
    return FewClassResult(
        assignment, cost, true_cost, completion_cost, budget, accepted,
        fewclass_guarantee(eps), trace, schedule, stats,
    )


def solve_few_classes(
    inst: GspInstance,
    eps: Number,
    guess_cap: int = DEFAULT_GUESS_CAP,
    release_cap: int = DEFAULT_RELEASE_DATE_CAP,
) -> Optional[FewClassResult]:
    """Due dates within (1+2eps)(1+eps)(1+eps) of optimal for class-form instances.

    Args:
        inst: Instance in class form f_j = w_j * g_{u(j)}
        eps: Accuracy parameter in (0, 1]
        guess_cap: Largest number of guess nodes per budget
        release_cap: Largest number of distinct release dates

    Returns:
        FewClassResult, or None when no budget yields feasible due dates

    Raises:
        InvalidParameterError: If eps is out of range or the instance lacks the class form
        CapExceededError: If the instance has too many release dates

    Example:
        >>> result = solve_few_classes(g1_classes, Fraction(1, 2))
        >>> edd_feasible(g1_classes.jobs, result.assignment)
        True
    """
    eps = to_fraction(eps)
    if not 0 < eps <= 1:
        raise InvalidParameterError(f"eps must lie in (0, 1], got {eps}")
    if inst.n and not inst.has_class_form:
        raise InvalidParameterError("The few-class solver needs every job in class form")
    enforce_cap("release dates", len(inst.release_dates), release_cap)
    stats = {
        "budgets_tried": 0,
        "guesses": 0,
        "lp_solves": 0,
        "rounding_checks": 0,
        "guess_cap_hits": 0,
    }
    if inst.n == 0:
        return _result(inst, {}, Fraction(0), Fraction(0), True, eps, stats)

    zero = _zero_cost_dates(inst)
    if zero is not None:
        logger.debug("zero-cost due dates exist; skipping the budget search")
        return _result(inst, zero, Fraction(0), Fraction(0), True, eps, stats)

    fallback: Optional[Tuple[Dict[int, int], Fraction, Fraction]] = None
    for budget in budget_grid(inst, eps):
        stats["budgets_tried"] += 1
        rounded = round_class_functions(
            inst.global_functions, budget, inst.weight_bound, inst.n, eps
        )
        due_dates = solver_due_dates(rounded, inst.jobs, inst.horizon)
        target = acceptance_bound(budget, eps)
        logger.debug("B=%s: %d due dates, target %s", budget, len(due_dates), target)
        search = _GuessSearch(inst.jobs, due_dates, rounded, target, guess_cap, stats)
        best = search.run()
        if best is None:
            continue
        dates = _tighten(inst, best.dates, due_dates, rounded)
        cost = sum((rounded.job_cost(job, dates[job.id]) for job in inst.jobs), Fraction(0))
        if cost <= target:
            return _result(inst, dates, cost, budget, True, eps, stats)
        if fallback is None or cost < fallback[1]:
            fallback = (dates, cost, budget)

    if fallback is None:
        return None
    dates, cost, budget = fallback
    logger.warning("no budget met its acceptance bound; returning the cheapest candidate")
    return _result(inst, dates, cost, budget, False, eps, stats)
