"""Instance types for both sides of the reduction.

UFP-cover works on a path with edges 0..m-1; edge e joins vertices e and
e+1, so a task spanning vertices [s, t] covers edges s..t-1. GSP jobs are
single machine jobs with integral processing time and release date.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from gspcover.core.model.numeric import Number, to_fraction
from gspcover.core.model.step import StepCostFunction
from gspcover.exceptions import InvalidInstanceError


@dataclass(frozen=True)
class UfpTask:
    """A task of a UFP-cover instance.
    
    Attributes:
        id: Unique task identifier
        s: Start vertex
        t: End vertex (s < t)
        p: Size, a positive integer
        c: Cost, a nonnegative rational
    """
    
    id: str
    s: int
    t: int
    p: int
    c: Fraction
    
    def __post_init__(self) -> None:
        object.__setattr__(self, "c", to_fraction(self.c))
        if not isinstance(self.p, int) or self.p < 1:
            raise InvalidInstanceError(f"Task {self.id}: size must be a positive integer")
        if self.c < 0:
            raise InvalidInstanceError(f"Task {self.id}: cost must be nonnegative")
        if not (0 <= self.s < self.t):
            raise InvalidInstanceError(f"Task {self.id}: need 0 <= s < t, got [{self.s}, {self.t}]")
    
    def covers(self, edge: int) -> bool:
        """True when the task's path contains the given edge."""
        return self.s <= edge < self.t
    
    @property
    def edges(self) -> range:
        """Edge indices on the task's path."""
        return range(self.s, self.t)


@dataclass(frozen=True)
class UfpCoverInstance:
    """UFP-cover instance: demands on a path plus candidate tasks.
    
    Attributes:
        m: Number of edges
        demands: Nonnegative integer demand per edge
        tasks: Candidate tasks
    """
    
    m: int
    demands: Tuple[int, ...]
    tasks: Tuple[UfpTask, ...] = ()
    
    def __post_init__(self) -> None:
        object.__setattr__(self, "demands", tuple(self.demands))
        object.__setattr__(self, "tasks", tuple(self.tasks))
        if self.m < 1:
            raise InvalidInstanceError("A path needs at least one edge")
        if len(self.demands) != self.m:
            raise InvalidInstanceError(
                f"Expected {self.m} demands, got {len(self.demands)}"
            )
        for demand in self.demands:
            if not isinstance(demand, int) or demand < 0:
                raise InvalidInstanceError(f"Demands must be nonnegative integers, got {demand!r}")
        seen = set()
        for task in self.tasks:
            if task.id in seen:
                raise InvalidInstanceError(f"Duplicate task id: {task.id}")
            seen.add(task.id)
            if task.t > self.m:
                raise InvalidInstanceError(
                    f"Task {task.id} ends at vertex {task.t} beyond the path ({self.m} edges)"
                )
    
    @property
    def n(self) -> int:
        """Number of tasks."""
        return len(self.tasks)
    
    def task(self, task_id: str) -> UfpTask:
        """Look up a task by id."""
        for task in self.tasks:
            if task.id == task_id:
                return task
        raise KeyError(task_id)
    
    def with_tasks(self, tasks: Sequence[UfpTask]) -> "UfpCoverInstance":
        """Same path and demands with another task list."""
        return UfpCoverInstance(self.m, self.demands, tuple(tasks))
    
    def with_demands(self, demands: Sequence[int]) -> "UfpCoverInstance":
        """Same path and tasks with other demands."""
        return UfpCoverInstance(self.m, tuple(demands), self.tasks)


@dataclass(frozen=True)
class Job:
    """A single machine job.
    
    Attributes:
        id: Unique job identifier
        p: Processing time, a positive integer
        r: Release date, a nonnegative integer
        f: Nondecreasing cost of the completion time
        u: Optional index into the instance's global functions
        w: Optional positive integer weight (class form f = w * g_u)
    """
    
    id: int
    p: int
    r: int = 0
    f: StepCostFunction = field(default_factory=StepCostFunction.zero)
    u: Optional[int] = None
    w: Optional[int] = None
    
    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p < 1:
            raise InvalidInstanceError(f"Job {self.id}: processing time must be a positive integer")
        if not isinstance(self.r, int) or self.r < 0:
            raise InvalidInstanceError(f"Job {self.id}: release date must be a nonnegative integer")
        if (self.u is None) != (self.w is None):
            raise InvalidInstanceError(f"Job {self.id}: class index and weight go together")
        if self.w is not None and (not isinstance(self.w, int) or self.w < 1):
            raise InvalidInstanceError(f"Job {self.id}: weight must be a positive integer")
    
    def cost(self, completion: Number) -> Fraction:
        """Cost of finishing at the given time."""
        return self.f.value_at(completion)


def class_job(
    job_id: int, p: int, r: int, u: int, w: int, functions: Sequence[StepCostFunction]
) -> Job:
    """Build a job in class form with f = w * g_u.
    
    Example:
        >>> g = StepCostFunction.linear(1, 10)
        >>> class_job(1, 2, 0, 0, 3, [g]).cost(4)
        Fraction(12, 1)
    """
    if not 0 <= u < len(functions):
        raise InvalidInstanceError(f"Job {job_id}: class index {u} out of range")
    return Job(id=job_id, p=p, r=r, f=functions[u].scaled(w), u=u, w=w)


@dataclass(frozen=True)
class GspInstance:
    """Single machine instance with job-dependent cost functions.
    
    Attributes:
        jobs: Jobs with unique ids
        global_functions: Class functions g_1..g_k when the class form is used
        weight_bound: Upper bound W on job weights
    """
    
    jobs: Tuple[Job, ...] = ()
    global_functions: Tuple[StepCostFunction, ...] = ()
    weight_bound: int = 1
    
    def __post_init__(self) -> None:
        object.__setattr__(self, "jobs", tuple(self.jobs))
        object.__setattr__(self, "global_functions", tuple(self.global_functions))
        ids = [job.id for job in self.jobs]
        if len(set(ids)) != len(ids):
            raise InvalidInstanceError("Duplicate job ids")
        if self.weight_bound < 1:
            raise InvalidInstanceError("Weight bound must be a positive integer")
        for job in self.jobs:
            if job.u is None:
                continue
            if job.u >= len(self.global_functions):
                raise InvalidInstanceError(f"Job {job.id}: class index {job.u} out of range")
            if job.w > self.weight_bound:
                raise InvalidInstanceError(
                    f"Job {job.id}: weight {job.w} exceeds bound {self.weight_bound}"
                )
            _check_class_form(job, self.global_functions[job.u])
    
    @property
    def n(self) -> int:
        """Number of jobs."""
        return len(self.jobs)
    
    @property
    def total_processing(self) -> int:
        """Sum of processing times."""
        return sum(job.p for job in self.jobs)
    
    @property
    def release_dates(self) -> Tuple[int, ...]:
        """Distinct release dates in increasing order."""
        return tuple(sorted({job.r for job in self.jobs}))
    
    @property
    def is_uniform_release(self) -> bool:
        """True when all jobs share one release date."""
        return len(self.release_dates) <= 1
    
    @property
    def class_count(self) -> int:
        """Number of global functions k."""
        return len(self.global_functions)
    
    @property
    def has_class_form(self) -> bool:
        """True when every job is expressed as w * g_u."""
        return bool(self.global_functions) and all(job.u is not None for job in self.jobs)
    
    @property
    def horizon(self) -> int:
        """Latest possible completion of an idle-free schedule."""
        if not self.jobs:
            return 0
        return max(job.r for job in self.jobs) + self.total_processing
    
    def job(self, job_id: int) -> Job:
        """Look up a job by id."""
        for job in self.jobs:
            if job.id == job_id:
                return job
        raise KeyError(job_id)
    
    def jobs_by_id(self) -> Dict[int, Job]:
        """Mapping from job id to job."""
        return {job.id: job for job in self.jobs}


def _check_class_form(job: Job, g: StepCostFunction) -> None:
    times = {t for t, _ in job.f.breakpoints} | {t for t, _ in g.breakpoints}
    for time in times:
        if not (job.f.is_available(time) and g.is_available(time)):
            continue
        if job.f.value_at(time) != job.w * g.value_at(time):
            raise InvalidInstanceError(
                f"Job {job.id}: f(t) != w * g(t) at t = {time}"
            )
