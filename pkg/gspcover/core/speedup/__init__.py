"""Optimal-cost scheduling at speed (1+eps)^6 through slot patterns and an LP."""

from gspcover.core.speedup.grid import IntervalGrid, artificial_release, round_completion
from gspcover.core.speedup.patterns import Pattern, count_patterns, enumerate_patterns
from gspcover.core.speedup.layout import Slot, SlotLayout, Window
from gspcover.core.speedup.combinations import (
    Combination,
    count_combinations,
    enumerate_combinations,
    interval_span,
    iter_combinations,
)
from gspcover.core.speedup.slp import (
    SlotAssignment,
    SlpModel,
    SpeedupJob,
    build_slp,
    round_slp,
)
from gspcover.core.speedup.solver import (
    DEFAULT_ORDER_BEAM,
    SPEED_BREAKDOWN,
    SPEED_EXPONENT,
    SpeedupResult,
    all_slot_layout,
    frame_condition,
    mixed_layout,
    realize,
    solve_speedup,
    speed_factor,
    validate_speed_schedule,
)

__all__ = [
    'IntervalGrid',
    'artificial_release',
    'round_completion',
    'Pattern',
    'count_patterns',
    'enumerate_patterns',
    'Slot',
    'SlotLayout',
    'Window',
    'Combination',
    'count_combinations',
    'enumerate_combinations',
    'interval_span',
    'iter_combinations',
    'SlotAssignment',
    'SlpModel',
    'SpeedupJob',
    'build_slp',
    'round_slp',
    'DEFAULT_ORDER_BEAM',
    'SPEED_BREAKDOWN',
    'SPEED_EXPONENT',
    'SpeedupResult',
    'all_slot_layout',
    'frame_condition',
    'mixed_layout',
    'realize',
    'solve_speedup',
    'speed_factor',
    'validate_speed_schedule',
]
