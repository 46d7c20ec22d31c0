"""Reduction from uniform-release GSP to UFP-cover and back."""

from gspcover.core.reduction.lift import (
    cover_due_dates,
    lift_cover_to_schedule,
    schedule_to_cover,
)
from gspcover.core.reduction.params import (
    DEFAULT_GAMMA,
    DEFAULT_GRID_SIZE,
    ReductionParams,
    expected_blowup,
    grid_guarantee,
)
from gspcover.core.reduction.reduce import ReducedTask, ReductionMap, reduce_gsp_to_ufp
from gspcover.core.reduction.solver import (
    AlphaRun,
    EApproxResult,
    solve_e_approx,
    solve_random_alpha,
)
from gspcover.core.reduction.thresholds import threshold_times

__all__ = [
    'cover_due_dates',
    'lift_cover_to_schedule',
    'schedule_to_cover',
    'DEFAULT_GAMMA',
    'DEFAULT_GRID_SIZE',
    'ReductionParams',
    'expected_blowup',
    'grid_guarantee',
    'ReducedTask',
    'ReductionMap',
    'reduce_gsp_to_ufp',
    'AlphaRun',
    'EApproxResult',
    'solve_e_approx',
    'solve_random_alpha',
    'threshold_times',
]
