"""Shared instance, schedule, profile and feasibility primitives."""

from gspcover.core.model.numeric import (
    ceil_log,
    ceil_power,
    floor_log,
    floor_power,
    to_fraction,
)
from gspcover.core.model.step import StepCostFunction, eval_step
from gspcover.core.model.instances import GspInstance, Job, UfpCoverInstance, UfpTask, class_job
from gspcover.core.model.profile import (
    DemandProfile,
    cover_cost,
    dominates,
    induced_profile,
    is_feasible_cover,
)
from gspcover.core.model.schedule import (
    Schedule,
    completion_times,
    schedule_cost,
    validate_schedule,
)
from gspcover.core.model.edd import (
    DueDateAssignment,
    EddTrace,
    edd_feasible,
    edd_simulate,
    interval_violation,
)
from gspcover.core.model.results import CoverSolution, DueDateSolution, ScheduleSolution

__all__ = [
    'ceil_log',
    'ceil_power',
    'floor_log',
    'floor_power',
    'to_fraction',
    'StepCostFunction',
    'eval_step',
    'GspInstance',
    'Job',
    'UfpCoverInstance',
    'UfpTask',
    'class_job',
    'DemandProfile',
    'cover_cost',
    'dominates',
    'induced_profile',
    'is_feasible_cover',
    'Schedule',
    'completion_times',
    'schedule_cost',
    'validate_schedule',
    'DueDateAssignment',
    'EddTrace',
    'edd_feasible',
    'edd_simulate',
    'interval_violation',
    'CoverSolution',
    'DueDateSolution',
    'ScheduleSolution',
]
