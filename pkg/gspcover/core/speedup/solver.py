"""Optimal-cost scheduling with speed augmentation.

The solver works in a compressed frame where job j needs q_j = p_j / (1+eps)^5
time units. Layouts come from combining one pattern per interval; when
there are too many combinations, job orders are laid out left to right on
the fine grid instead, either with one slot per job or with consecutive
short jobs packed into one window per interval. Each layout becomes an sLP
whose vertex is rounded to an integral assignment, and the cheapest
assignment is realized at speed (1+eps)^6.

Speed exponent:
    objective rounding  2   (completion times rounded to powers of 1+eps)
    discretization      3   (artificial releases and grid-aligned slots)
    rounding overflow   1   (windows may overflow by eps * |I_t|)
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from gspcover.core.lp import solve_to_basic_optimum
from gspcover.core.model.instances import GspInstance
from gspcover.core.model.numeric import Number, to_fraction
from gspcover.core.model.schedule import Schedule, schedule_cost, validate_schedule
from gspcover.core.speedup.combinations import enumerate_combinations
from gspcover.core.speedup.grid import IntervalGrid, artificial_release, round_completion
from gspcover.core.speedup.layout import Slot, SlotLayout, Window
from gspcover.core.speedup.slp import SlotAssignment, SpeedupJob, build_slp, round_slp
from gspcover.exceptions import (
    CapExceededError,
    CostUnavailableError,
    InvalidParameterError,
    InvalidScheduleError,
)
from gspcover.utils.validation.caps import DEFAULT_PATTERN_CAP

logger = logging.getLogger(__name__)

SPEED_BREAKDOWN = {"objective rounding": 2, "discretization": 3, "rounding overflow": 1}
SPEED_EXPONENT = sum(SPEED_BREAKDOWN.values())

# processing times inside the LP frame are divided by (1+eps)^FRAME_EXPONENT
FRAME_EXPONENT = SPEED_EXPONENT - SPEED_BREAKDOWN["rounding overflow"]

DEFAULT_ORDER_BEAM = 8


@dataclass(frozen=True)
class SpeedupResult:
    """Schedule found by the speedup solver.

    Attributes:
        schedule: Schedule running at ``speed``
        speed: Machine speed (1+eps)^exponent, 1 for an empty instance
        exponent: Exponent of 1+eps in the speed
        breakdown: Contribution of each step to the exponent
        cost: sum_j f_j(C_j) at the realized completion times
        rounded_cost: sum_j f_j of C_j rounded up to a power of 1+eps
        lp_cost: Cost of the rounded sLP assignment
        frame_condition: False when grid snapping may leave the compressed frame,
            in which case the cost is not guaranteed to stay below the optimum
        stats: Search counters
    """

    schedule: Schedule
    speed: Fraction
    exponent: int
    breakdown: Dict[str, int]
    cost: Fraction
    rounded_cost: Fraction
    lp_cost: Fraction
    frame_condition: bool = True
    stats: Dict[str, int] = field(default_factory=dict, compare=False)


def speed_factor(eps: Number) -> Fraction:
    """(1+eps)^6, the speed at which solver output is feasible."""
    return (1 + to_fraction(eps)) ** SPEED_EXPONENT


def frame_condition(eps: Number, n: int) -> bool:
    """Whether grid snapping keeps every compressed order inside the unit-speed one.

    With step rho, n jobs lose at most a factor (1+rho)^(2n) to snapping, and
    releases plus compressed work take at most eps/(1+eps) + 1/(1+eps)^5 of
    a completion time. Both together must stay below 1/(1+eps).
    """
    eps = to_fraction(eps)
    grid = IntervalGrid(eps)
    slack = eps / (1 + eps) + 1 / (1 + eps) ** FRAME_EXPONENT
    return (1 + grid.step) ** (2 * n) * slack <= 1 / (1 + eps)


def validate_speed_schedule(
    inst: GspInstance,
    sched: Schedule,
    speed: Number,
    eps: Optional[Number] = None,
    artificial: bool = False,
) -> bool:
    """Check a schedule with processing times p_j / speed.

    Args:
        inst: Instance
        sched: Start times to check; its own speed is ignored
        speed: Speed to check at
        eps: Accuracy parameter, needed when ``artificial`` is set
        artificial: Check against artificial releases r(j) instead of r_j

    Returns:
        bool: True if no two jobs overlap and every job starts after its release

    Example:
        >>> validate_speed_schedule(g1, Schedule.from_order(g1, [2, 1]), Fraction(3, 2))
        True
    """
    releases = None
    if artificial:
        if eps is None:
            raise InvalidParameterError("Artificial releases need eps")
        releases = {
            job.id: max(Fraction(job.r), artificial_release(job.p, eps)) for job in inst.jobs
        }
    valid, errors = validate_schedule(inst, Schedule(sched.starts, to_fraction(speed)), releases)
    if not valid:
        logger.debug("speed schedule rejected: %s", "; ".join(errors))
    return valid


def _cost_at(job: SpeedupJob, time: Fraction) -> Optional[Fraction]:
    try:
        return job.job.cost(time)
    except CostUnavailableError:
        return None


class _OrderSearch:
    """Depth-first search over job orders keeping the cheapest all-slot layouts."""

    def __init__(self, jobs: Sequence[SpeedupJob], grid: IntervalGrid, beam: int, cap: int):
        self.jobs = sorted(jobs, key=lambda job: job.id)
        self.grid = grid
        self.beam = beam
        self.cap = cap
        self.nodes = 0
        self.cap_hit = False
        self.kept: List[Tuple[Fraction, Tuple[int, ...]]] = []

    def _bar(self) -> Optional[Fraction]:
        if len(self.kept) < self.beam:
            return None
        return self.kept[-1][0]

    def _remaining_bound(self, cursor: Fraction, remaining: Sequence[SpeedupJob]) -> Optional[Fraction]:
        total = Fraction(0)
        for job in remaining:
            cost = _cost_at(job, round_completion(max(cursor, job.release) + job.q, self.grid.eps))
            if cost is None:
                return None
            total += cost
        return total

    def run(self) -> List[Tuple[int, ...]]:
        self._walk((), Fraction(0), Fraction(0), self.jobs)
        if self.cap_hit:
            logger.warning(
                "order search stopped after %d nodes; keeping the best orders seen so far", self.cap
            )
        return [order for _, order in self.kept]

    def _walk(
        self,
        order: Tuple[int, ...],
        cursor: Fraction,
        cost: Fraction,
        remaining: Sequence[SpeedupJob],
    ) -> None:
        if self.nodes >= self.cap:
            self.cap_hit = True
            return
        self.nodes += 1
        if not remaining:
            self.kept.append((cost, order))
            self.kept.sort()
            del self.kept[self.beam:]
            return
        bound = self._remaining_bound(cursor, remaining)
        bar = self._bar()
        if bound is None or (bar is not None and cost + bound >= bar):
            return
        for job in remaining:
            begin = self.grid.snap(max(cursor, job.release))
            end = self.grid.snap(begin + job.q)
            paid = _cost_at(job, round_completion(end, self.grid.eps))
            if paid is None:
                continue
            rest = [other for other in remaining if other.id != job.id]
            self._walk(order + (job.id,), end, cost + paid, rest)


def all_slot_layout(order: Sequence[int], jobs: Dict[int, SpeedupJob], grid: IntervalGrid) -> SlotLayout:
    """One slot per job, each as early as its release and predecessor allow."""
    slots = []
    cursor = Fraction(0)
    for job_id in order:
        job = jobs[job_id]
        begin = grid.snap(max(cursor, job.release))
        end = grid.snap(begin + job.q)
        slots.append(Slot(begin, end))
        cursor = end
    return SlotLayout(tuple(slots))


def mixed_layout(order: Sequence[int], jobs: Dict[int, SpeedupJob], grid: IntervalGrid) -> SlotLayout:
    """Like the all-slot layout, but runs of short jobs share one window per interval.

    A window in interval t is followed by a gap of eps * |I_t| / (1+eps), room
    for the overflow the rounding may add once jobs run at full speed.
    """
    eps = grid.eps
    slots: List[Slot] = []
    windows: List[Window] = []
    closed: Set[int] = set()
    cursor = Fraction(0)
    open_window: Optional[Window] = None

    def fits_window(job: SpeedupJob, t: int) -> bool:
        return t not in closed and job.q <= eps * grid.length(t) and job.release <= grid.start(t)

    for job_id in order:
        job = jobs[job_id]
        if open_window is not None:
            t = open_window.t
            end = grid.snap(open_window.b + job.q)
            if fits_window(job, t) and end + grid.overflow_gap(t) <= grid.start(t + 1):
                open_window = Window(t, open_window.a, end)
                continue
            windows.append(open_window)
            closed.add(t)
            cursor = grid.snap(open_window.b + grid.overflow_gap(t))
            open_window = None
        if cursor > 0:
            t = grid.interval_of(cursor)
            end = grid.snap(cursor + job.q)
            if fits_window(job, t) and end + grid.overflow_gap(t) <= grid.start(t + 1):
                open_window = Window(t, cursor, end)
                continue
        begin = grid.snap(max(cursor, job.release))
        end = grid.snap(begin + job.q)
        slots.append(Slot(begin, end))
        cursor = end
    if open_window is not None:
        windows.append(open_window)
    return SlotLayout(tuple(slots), tuple(windows))


def realize(
    layout: SlotLayout,
    assignment: SlotAssignment,
    jobs: Dict[int, SpeedupJob],
    speed: Fraction,
) -> Schedule:
    """Concrete start times: slot jobs at their slot, window jobs packed from the window start."""
    starts = [(job_id, layout.slots[s].beg) for job_id, s in assignment.slots.items()]
    by_window: Dict[int, List[int]] = {}
    for job_id, t in assignment.windows.items():
        by_window.setdefault(t, []).append(job_id)
    for t, members in by_window.items():
        cursor = layout.window(t).a
        for job_id in sorted(members):
            starts.append((job_id, cursor))
            cursor += Fraction(jobs[job_id].job.p) / speed
    return Schedule(tuple(starts), speed)


def _rounded_cost(inst: GspInstance, sched: Schedule, eps: Fraction) -> Fraction:
    return sum(
        (job.cost(round_completion(sched.completion_of(job), eps)) for job in inst.jobs),
        Fraction(0),
    )


class _LayoutSearch:
    """Solves and rounds the sLP of each layout, keeping the cheapest realized schedule."""

    def __init__(
        self,
        inst: GspInstance,
        jobs: Dict[int, SpeedupJob],
        grid: IntervalGrid,
        speed: Fraction,
        stats: Dict[str, int],
    ):
        self.inst = inst
        self.jobs = jobs
        self.grid = grid
        self.speed = speed
        self.stats = stats
        self.best: Optional[Tuple[SlotAssignment, Schedule]] = None

    def offer(self, layout: SlotLayout) -> None:
        valid, errors = layout.validate(self.grid)
        if not valid:
            raise InvalidScheduleError("; ".join(errors))
        self.stats["layouts"] += 1
        model = build_slp(layout, list(self.jobs.values()), self.grid)
        bound = model.cheapest_bound()
        if bound is None or (self.best is not None and bound >= self.best[0].cost):
            return
        self.stats["lp_solves"] += 1
        solution = solve_to_basic_optimum(model.lp)
        if not solution.is_optimal:
            logger.debug("sLP of %d slots, %d windows: %s",
                         len(layout.slots), len(layout.windows), solution.status)
            return
        assignment = round_slp(model, solution)
        if self.best is not None and assignment.cost >= self.best[0].cost:
            return
        schedule = realize(layout, assignment, self.jobs, self.speed)
        if not validate_speed_schedule(
            self.inst, schedule, self.speed, self.grid.eps, artificial=True
        ):
            _, errors = validate_schedule(self.inst, schedule)
            raise InvalidScheduleError(
                "; ".join(errors) or "job starts before its artificial release"
            )
        self.best = (assignment, schedule)


def _search_combinations(
    search: _LayoutSearch, cap: int, stats: Dict[str, int]
) -> bool:
    """Offer every pattern combination; False when the cap refused the enumeration."""
    try:
        total, combinations = enumerate_combinations(
            list(search.jobs.values()), search.grid, cap
        )
    except CapExceededError as e:
        logger.info("pattern combinations: %s; using order layouts", e)
        stats["pattern_cap_hits"] += 1
        return False
    stats["pattern_combinations"] = total
    for combination in combinations:
        layout = combination.layout(search.grid)
        if not layout.leaves_overflow_room(search.grid):
            stats["combinations_without_room"] += 1
            continue
        search.offer(layout)
    return True


def _search_orders(search: _LayoutSearch, cap: int, beam: int, stats: Dict[str, int]) -> None:
    """Offer the all-slot and mixed layouts of the cheapest job orders."""
    orders = _OrderSearch(list(search.jobs.values()), search.grid, beam, cap)
    kept = orders.run()
    stats["order_fallbacks"] += 1
    stats["order_nodes"] = orders.nodes
    stats["orders_kept"] = len(kept)
    stats["order_cap_hits"] = int(orders.cap_hit)
    seen: Set[SlotLayout] = set()
    for order in kept:
        for layout in (
            all_slot_layout(order, search.jobs, search.grid),
            mixed_layout(order, search.jobs, search.grid),
        ):
            if layout not in seen:
                seen.add(layout)
                search.offer(layout)


def solve_speedup(
    inst: GspInstance,
    eps: Number,
    cap: int = DEFAULT_PATTERN_CAP,
    beam: int = DEFAULT_ORDER_BEAM,
) -> Optional[SpeedupResult]:
    """Cheapest schedule feasible at speed (1+eps)^6 for release dates 0.

    Every combination of interval patterns is tried when there are at most
    ``cap`` of them. Otherwise, or when no combination hosts every job, the
    layouts of the ``beam`` cheapest job orders are tried instead; the
    stats record which search ran.

    Args:
        inst: Instance with every release date 0
        eps: Accuracy parameter in (0, 1)
        cap: Largest number of patterns per interval, of pattern
            combinations and of order-search nodes
        beam: Number of cheapest orders whose layouts go to the sLP

    Returns:
        SpeedupResult, or None if no layout admits every job

    Raises:
        InvalidParameterError: On eps outside (0, 1) or nonzero release dates
        RoundingError: If an sLP rounding post-condition fails

    Example:
        >>> result = solve_speedup(g1, Fraction(1, 2))
        >>> result.cost <= 11
        True
    """
    eps = to_fraction(eps)
    if not 0 < eps < 1:
        raise InvalidParameterError(f"eps must lie in (0, 1), got {eps}")
    if any(job.r != 0 for job in inst.jobs):
        raise InvalidParameterError("The speedup solver needs every release date to be 0")
    if beam < 1:
        raise InvalidParameterError(f"beam must be positive, got {beam}")
    if inst.n == 0:
        return SpeedupResult(Schedule(()), Fraction(1), 0, {}, Fraction(0), Fraction(0), Fraction(0))

    frame_ok = frame_condition(eps, inst.n)
    if not frame_ok:
        logger.warning(
            "eps=%s with %d jobs: grid snapping may exceed the compressed frame", eps, inst.n
        )
    grid = IntervalGrid(eps)
    speed = speed_factor(eps)
    frame = (1 + eps) ** FRAME_EXPONENT
    jobs = {
        job.id: SpeedupJob(job, Fraction(job.p) / frame, artificial_release(job.p, eps))
        for job in inst.jobs
    }
    stats = {
        "pattern_combinations": 0,
        "pattern_cap_hits": 0,
        "combinations_without_room": 0,
        "order_fallbacks": 0,
        "order_nodes": 0,
        "orders_kept": 0,
        "order_cap_hits": 0,
        "layouts": 0,
        "lp_solves": 0,
        "frame_condition_failures": int(not frame_ok),
    }

    search = _LayoutSearch(inst, jobs, grid, speed, stats)
    if not _search_combinations(search, cap, stats) or search.best is None:
        if stats["pattern_cap_hits"] == 0:
            logger.info("no pattern combination hosts every job; using order layouts")
        _search_orders(search, cap, beam, stats)

    if search.best is None:
        return None
    assignment, schedule = search.best
    cost = schedule_cost(inst, schedule)
    rounded = _rounded_cost(inst, schedule, eps)
    logger.debug(
        "speedup: cost %s (rounded %s, assignment %s) at speed %s", cost, rounded,
        assignment.cost, speed,
    )
    return SpeedupResult(
        schedule, speed, SPEED_EXPONENT, dict(SPEED_BREAKDOWN), cost, rounded, assignment.cost,
        frame_ok, stats,
    )
