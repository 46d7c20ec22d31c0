"""Moving between covers of the reduced instance and schedules."""

from fractions import Fraction
from typing import Dict, Iterable, Tuple

from gspcover.core.model.instances import GspInstance, UfpTask
from gspcover.core.model.schedule import Schedule
from gspcover.core.reduction.reduce import ReductionMap
from gspcover.exceptions import InvalidCoverError


def cover_due_dates(cover: Iterable[UfpTask], rmap: ReductionMap) -> Dict[int, int]:
    """Due date per job: last step of its right-most chosen task.

    Raises:
        InvalidCoverError: If some job has no chosen task
    """
    due: Dict[int, int] = {}
    for task in cover:
        try:
            entry = rmap.entry(task.id)
        except KeyError as e:
            raise InvalidCoverError(f"Task {task.id} is not part of the reduction") from e
        due[entry.job_id] = max(due.get(entry.job_id, 0), entry.last_step)
    missing = sorted(job_id for job_id, _ in rmap.sizes if job_id not in due)
    if missing:
        raise InvalidCoverError(f"Cover has no task for jobs {missing}")
    return due


def lift_cover_to_schedule(
    cover: Iterable[UfpTask], rmap: ReductionMap, inst: GspInstance
) -> Schedule:
    """Schedule jobs earliest-due-date first without idle time.

    For a feasible cover every job meets its due date, so its cost is at
    most the cost of its right-most chosen task.

    Args:
        cover: Chosen tasks of the reduced instance
        rmap: Map returned by the reduction
        inst: Original instance

    Returns:
        Schedule: EDD order, ties by job id, starting at 0

    Raises:
        InvalidCoverError: If some job has no chosen task
    """
    due = cover_due_dates(cover, rmap)
    order = sorted(due, key=lambda job_id: (due[job_id], job_id))
    return Schedule.from_order(inst, order)


def schedule_to_cover(sched: Schedule, rmap: ReductionMap) -> Tuple[UfpTask, ...]:
    """Tasks whose first step is at or before their job's completion time.

    For a valid schedule this is a feasible cover of the reduced instance.
    """
    chosen = []
    for entry in rmap.tasks:
        completion = sched.start_of(entry.job_id) + Fraction(rmap.size_of(entry.job_id)) / sched.speed
        if entry.first_step <= completion:
            chosen.append(entry.task)
    return tuple(chosen)
