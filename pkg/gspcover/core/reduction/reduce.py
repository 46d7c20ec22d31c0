"""Reduction from uniform-release GSP to UFP-cover.

Time step i in 1..P is edge i-1 of the path over vertices 0..P, with demand
P - i + 1: whatever finishes by step i-1 has at most i-1 units done, so the
jobs still open at step i carry at least P - i + 1 units. Each job gets one
task per pair of consecutive threshold times (t_{i-1}, t_i), covering steps
t_{i-1}..t_i - 1 at cost f_j(t_i - 1).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from gspcover.core.model.instances import GspInstance, UfpCoverInstance, UfpTask
from gspcover.core.reduction.params import ReductionParams
from gspcover.core.reduction.thresholds import threshold_times
from gspcover.exceptions import CostUnavailableError, InvalidParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedTask:
    """A generated task and the time steps it stands for.

    Attributes:
        task: Task of the reduced instance (compressed coordinates if compressed)
        job_id: Job that generated it
        index: Position i of the threshold pair (1-based)
        first_step: t_{i-1}
        last_step: t_i - 1
    """

    task: UfpTask
    job_id: int
    index: int
    first_step: int
    last_step: int


@dataclass(frozen=True)
class ReductionMap:
    """Bookkeeping to move between covers and schedules.

    Attributes:
        tasks: Generated tasks in job order, then threshold order
        horizon: P = total processing time
        vertices: Kept path vertices when compressed, else None
        sizes: (job id, processing time) pairs
        params: Rounding parameters used
    """

    tasks: Tuple[ReducedTask, ...]
    horizon: int
    vertices: Optional[Tuple[int, ...]]
    sizes: Tuple[Tuple[int, int], ...]
    params: ReductionParams

    def tasks_of(self, job_id: int) -> Tuple[ReducedTask, ...]:
        """Generated tasks of one job."""
        return tuple(entry for entry in self.tasks if entry.job_id == job_id)

    def entry(self, task_id: str) -> ReducedTask:
        """Generated task by id."""
        for entry in self.tasks:
            if entry.task.id == task_id:
                return entry
        raise KeyError(task_id)

    def size_of(self, job_id: int) -> int:
        return dict(self.sizes)[job_id]


def reduce_gsp_to_ufp(
    inst: GspInstance, params: ReductionParams, compress: bool = True
) -> Tuple[UfpCoverInstance, ReductionMap]:
    """Build the UFP-cover instance of a uniform-release GSP instance.

    With ``compress`` the path keeps only 0, P and the task endpoints; a
    stretch between kept vertices v < v' becomes one edge with the demand
    of its first step, P - v.

    Args:
        inst: Instance with every release date 0
        params: gamma and alpha of the rounding
        compress: Keep only vertices where tasks start or end

    Returns:
        tuple: (reduced instance, reduction map)

    Raises:
        InvalidParameterError: If release dates are not all 0 or there are no jobs
    """
    if inst.n == 0:
        raise InvalidParameterError("Cannot reduce an instance without jobs")
    if any(job.r != 0 for job in inst.jobs):
        raise InvalidParameterError("The reduction needs every release date to be 0")

    horizon = inst.total_processing
    raw: List[Tuple[int, int, int, int, int, Fraction]] = []
    for job in sorted(inst.jobs, key=lambda job: job.id):
        times = threshold_times(job, params.gamma, params.alpha, horizon)
        for index in range(1, len(times)):
            first_step, last_step = times[index - 1], times[index] - 1
            start_vertex = max(first_step, 1) - 1
            if start_vertex >= last_step:
                continue
            try:
                cost = job.cost(last_step)
            except CostUnavailableError:
                continue
            raw.append((job.id, index, first_step, last_step, start_vertex, cost))

    if compress:
        kept = sorted({0, horizon} | {r[4] for r in raw} | {r[3] for r in raw})
        position: Dict[int, int] = {vertex: i for i, vertex in enumerate(kept)}
        demands = tuple(horizon - vertex for vertex in kept[:-1])
        vertices: Optional[Tuple[int, ...]] = tuple(kept)
    else:
        position = {vertex: vertex for vertex in range(horizon + 1)}
        demands = tuple(horizon - edge for edge in range(horizon))
        vertices = None

    entries = []
    sizes = {job.id: job.p for job in inst.jobs}
    for job_id, index, first_step, last_step, start_vertex, cost in raw:
        task = UfpTask(
            f"j{job_id}-{index}", position[start_vertex], position[last_step], sizes[job_id], cost
        )
        entries.append(ReducedTask(task, job_id, index, first_step, last_step))

    reduced = UfpCoverInstance(len(demands), demands, tuple(entry.task for entry in entries))
    rmap = ReductionMap(tuple(entries), horizon, vertices, tuple(sorted(sizes.items())), params)
    logger.debug(
        "reduced %d jobs to %d tasks on %d edges (alpha=%s)",
        inst.n, len(entries), reduced.m, params.alpha,
    )
    return reduced, rmap
