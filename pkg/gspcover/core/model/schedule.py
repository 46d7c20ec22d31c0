"""Nonpreemptive single machine schedules."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from gspcover.core.model.instances import GspInstance, Job
from gspcover.core.model.numeric import Number, to_fraction
from gspcover.exceptions import InvalidScheduleError


@dataclass(frozen=True)
class Schedule:
    """Start times of jobs on one machine running at a fixed speed.

    A job with processing time p occupies [S, S + p / speed).

    Attributes:
        starts: (job id, start time) pairs ordered by start time
        speed: Machine speed, 1 for unit speed
    """

    starts: Tuple[Tuple[int, Fraction], ...] = ()
    speed: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        pairs = tuple((job_id, to_fraction(start)) for job_id, start in self.starts)
        pairs = tuple(sorted(pairs, key=lambda pair: (pair[1], pair[0])))
        object.__setattr__(self, "starts", pairs)
        object.__setattr__(self, "speed", to_fraction(self.speed))
        if self.speed <= 0:
            raise InvalidScheduleError("Speed must be positive")

    @classmethod
    def from_order(
        cls,
        inst: GspInstance,
        order: Iterable[int],
        speed: Number = 1,
        start: Number = 0,
    ) -> "Schedule":
        """Run jobs back to back in the given order, waiting only for releases.

        Example:
            >>> sched = Schedule.from_order(g1, [2, 1])
            >>> sched.order
            (2, 1)
        """
        speed = to_fraction(speed)
        jobs = inst.jobs_by_id()
        cursor = to_fraction(start)
        starts = []
        for job_id in order:
            job = jobs[job_id]
            begin = max(cursor, Fraction(job.r))
            starts.append((job_id, begin))
            cursor = begin + Fraction(job.p) / speed
        return cls(tuple(starts), speed)

    @property
    def order(self) -> Tuple[int, ...]:
        """Job ids in order of start time."""
        return tuple(job_id for job_id, _ in self.starts)

    def start_of(self, job_id: int) -> Fraction:
        """Start time of a job."""
        for other, start in self.starts:
            if other == job_id:
                return start
        raise KeyError(job_id)

    def completion_of(self, job: Job) -> Fraction:
        """Completion time S_j + p_j / speed."""
        return self.start_of(job.id) + Fraction(job.p) / self.speed


def completion_times(inst: GspInstance, sched: Schedule) -> Dict[int, Fraction]:
    """Completion time per job id."""
    return {job.id: sched.completion_of(job) for job in inst.jobs}


def validate_schedule(
    inst: GspInstance, sched: Schedule, releases: Optional[Dict[int, Fraction]] = None
) -> Tuple[bool, List[str]]:
    """Check that a schedule is a valid nonpreemptive schedule of the instance.

    Args:
        inst: Instance the schedule belongs to
        sched: Schedule to check
        releases: Optional release date per job id overriding r_j

    Returns:
        tuple: (is_valid, errors)
            - is_valid: True if every job runs once, after release, without overlap
            - errors: Human-readable problems, empty when valid
    """
    errors: List[str] = []
    jobs = inst.jobs_by_id()
    scheduled = [job_id for job_id, _ in sched.starts]

    missing = sorted(set(jobs) - set(scheduled))
    if missing:
        errors.append(f"Jobs not scheduled: {missing}")
    unknown = sorted(set(scheduled) - set(jobs))
    if unknown:
        errors.append(f"Unknown jobs scheduled: {unknown}")
    if len(scheduled) != len(set(scheduled)):
        errors.append("A job is scheduled more than once")
    if errors:
        return False, errors

    previous_end: Optional[Fraction] = None
    previous_id: Optional[int] = None
    for job_id, start in sched.starts:
        job = jobs[job_id]
        release = Fraction(job.r) if releases is None else releases.get(job_id, Fraction(job.r))
        if start < release:
            errors.append(f"Job {job_id} starts at {start} before its release {release}")
        if previous_end is not None and start < previous_end:
            errors.append(f"Job {job_id} overlaps job {previous_id}")
        previous_end = start + Fraction(job.p) / sched.speed
        previous_id = job_id

    return len(errors) == 0, errors


def schedule_cost(inst: GspInstance, sched: Schedule) -> Fraction:
    """Total cost sum_j f_j(C_j) of a valid schedule.

    Raises:
        InvalidScheduleError: If the schedule is not valid for the instance

    Example:
        >>> schedule_cost(g1, Schedule.from_order(g1, [2, 1]))
        Fraction(11, 1)
    """
    valid, errors = validate_schedule(inst, sched)
    if not valid:
        raise InvalidScheduleError("; ".join(errors))
    return sum(
        (job.cost(sched.completion_of(job)) for job in inst.jobs),
        Fraction(0),
    )
