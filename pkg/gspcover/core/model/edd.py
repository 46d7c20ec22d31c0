"""Due date assignments and their feasibility.

A set of due dates is feasible when some preemptive schedule finishes every
job by its due date. Preemptive earliest-due-date-first decides this, and so
does the release interval condition: for every interval I = [r_j, d_j'] the
jobs released inside I with a due date after I must carry at least
ex(I) = max(sum of sizes released in I - |I|, 0) units, where |I| = d_j' - r_j.
"""

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from gspcover.core.model.instances import Job
from gspcover.core.model.numeric import Number, to_fraction
from gspcover.exceptions import InvalidParameterError


@dataclass(frozen=True)
class DueDateAssignment:
    """One due date per job id."""

    dates: Tuple[Tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        pairs = tuple(sorted((job_id, to_fraction(d)) for job_id, d in self.dates))
        ids = [job_id for job_id, _ in pairs]
        if len(ids) != len(set(ids)):
            raise InvalidParameterError("A job has more than one due date")
        object.__setattr__(self, "dates", pairs)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Number]) -> "DueDateAssignment":
        """Build from a job id -> due date mapping."""
        return cls(tuple(mapping.items()))

    def __getitem__(self, job_id: int) -> Fraction:
        for other, date in self.dates:
            if other == job_id:
                return date
        raise KeyError(job_id)

    def __len__(self) -> int:
        return len(self.dates)

    def as_dict(self) -> Dict[int, Fraction]:
        """Plain dict copy."""
        return dict(self.dates)


DueDates = Union[DueDateAssignment, Mapping[int, Number]]


@dataclass(frozen=True)
class EddSegment:
    """A maximal piece of one job running without interruption."""

    job_id: int
    start: Fraction
    end: Fraction


@dataclass(frozen=True)
class EddTrace:
    """Result of simulating preemptive earliest-due-date-first.

    Attributes:
        segments: Execution pieces in time order
        completions: Completion time per job id
        feasible: True when every job meets its due date
    """

    segments: Tuple[EddSegment, ...]
    completions: Tuple[Tuple[int, Fraction], ...]
    feasible: bool

    @property
    def is_preemptive(self) -> bool:
        """True when some job runs in more than one piece."""
        ids = [segment.job_id for segment in self.segments]
        return len(ids) != len(set(ids))

    def completion_of(self, job_id: int) -> Fraction:
        """Completion time of a job in the trace."""
        return dict(self.completions)[job_id]


@dataclass(frozen=True)
class IntervalViolation:
    """Witness that a due date assignment is infeasible."""

    start: Fraction
    end: Fraction
    excess: Fraction
    later_volume: Fraction


def _normalize(due_dates: DueDates) -> Dict[int, Fraction]:
    if isinstance(due_dates, DueDateAssignment):
        return due_dates.as_dict()
    return {job_id: to_fraction(d) for job_id, d in due_dates.items()}


def edd_simulate(jobs: Sequence[Job], due_dates: DueDates) -> EddTrace:
    """Simulate preemptive EDD, breaking due date ties by job id.

    Args:
        jobs: Jobs to schedule (each needs a due date)
        due_dates: Due date per job id

    Returns:
        EddTrace: Segments, completions and the feasibility verdict

    Example:
        >>> trace = edd_simulate([Job(1, 2), Job(2, 3)], {1: 5, 2: 3})
        >>> trace.feasible
        True
    """
    dates = _normalize(due_dates)
    pending = sorted(jobs, key=lambda job: (job.r, job.id))
    remaining = {job.id: Fraction(job.p) for job in jobs}
    ready: List[Tuple[Fraction, int]] = []
    segments: List[EddSegment] = []
    completions: Dict[int, Fraction] = {}

    index = 0
    time = Fraction(pending[0].r) if pending else Fraction(0)
    while index < len(pending) or ready:
        while index < len(pending) and pending[index].r <= time:
            job = pending[index]
            heapq.heappush(ready, (dates[job.id], job.id))
            index += 1
        if not ready:
            time = Fraction(pending[index].r)
            continue
        _, job_id = ready[0]
        next_release = Fraction(pending[index].r) if index < len(pending) else None
        finish = time + remaining[job_id]
        end = finish if next_release is None else min(finish, next_release)
        if segments and segments[-1].job_id == job_id and segments[-1].end == time:
            segments[-1] = EddSegment(job_id, segments[-1].start, end)
        else:
            segments.append(EddSegment(job_id, time, end))
        remaining[job_id] -= end - time
        time = end
        if remaining[job_id] == 0:
            heapq.heappop(ready)
            completions[job_id] = time

    feasible = all(completions[job.id] <= dates[job.id] for job in jobs)
    return EddTrace(tuple(segments), tuple(sorted(completions.items())), feasible)


def interval_violation(jobs: Sequence[Job], due_dates: DueDates) -> Optional[IntervalViolation]:
    """First interval [r_j, d_j'] breaking the release interval condition.

    Intervals are scanned by increasing start, then increasing end.

    Returns:
        IntervalViolation or None when the due dates are feasible
    """
    dates = _normalize(due_dates)
    for job in sorted(jobs, key=lambda job: (job.r, job.id)):
        start = Fraction(job.r)
        end = dates[job.id]
        if end < start + job.p:
            # A job cannot finish before r_j + p_j.
            shortfall = Fraction(job.p) - max(end - start, Fraction(0))
            return IntervalViolation(start, end, shortfall, Fraction(0))
    starts = sorted({Fraction(job.r) for job in jobs})
    ends = sorted({dates[job.id] for job in jobs})
    for start in starts:
        for end in ends:
            if end < start:
                continue
            released = [job for job in jobs if start <= job.r <= end]
            volume = sum((Fraction(job.p) for job in released), Fraction(0))
            excess = max(volume - (end - start), Fraction(0))
            if excess == 0:
                continue
            later = sum(
                (Fraction(job.p) for job in released if dates[job.id] > end),
                Fraction(0),
            )
            if later < excess:
                return IntervalViolation(start, end, excess, later)
    return None


def edd_feasible(jobs: Sequence[Job], due_dates: DueDates, method: str = "simulation") -> bool:
    """Decide whether the due dates admit a preemptive schedule.

    Args:
        jobs: Jobs with release dates
        due_dates: Due date per job id
        method: "simulation" (EDD) or "intervals" (release interval condition)

    Returns:
        bool: True iff every job can finish by its due date
    """
    if method == "simulation":
        return edd_simulate(jobs, due_dates).feasible
    if method == "intervals":
        return interval_violation(jobs, due_dates) is None
    raise InvalidParameterError(f"Unknown feasibility method: {method}")
