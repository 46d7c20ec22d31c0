"""Scheduling with few cost classes and few release dates."""

from gspcover.core.fewclass.rounding import (
    RoundedClassSet,
    due_date_candidates,
    floor_value,
    round_class_functions,
    round_value,
    solver_due_dates,
)
from gspcover.core.fewclass.lp import (
    DueDateLp,
    ExpensiveGuess,
    admissible_cost,
    build_due_date_lp,
    check_rounding_bound,
    round_due_date_lp,
)
from gspcover.core.fewclass.solver import (
    DEFAULT_RELEASE_DATE_CAP,
    FewClassResult,
    acceptance_bound,
    budget_grid,
    fewclass_guarantee,
    solve_few_classes,
)

__all__ = [
    'RoundedClassSet',
    'due_date_candidates',
    'floor_value',
    'round_class_functions',
    'round_value',
    'solver_due_dates',
    'DueDateLp',
    'ExpensiveGuess',
    'admissible_cost',
    'build_due_date_lp',
    'check_rounding_bound',
    'round_due_date_lp',
    'DEFAULT_RELEASE_DATE_CAP',
    'FewClassResult',
    'acceptance_bound',
    'budget_grid',
    'fewclass_guarantee',
    'solve_few_classes',
]
