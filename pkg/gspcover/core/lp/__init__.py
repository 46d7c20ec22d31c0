"""Exact linear programming with vertex optima."""

from gspcover.core.lp.program import (
    BasicSolution,
    Constraint,
    LinearProgram,
    LPStatus,
    Relation,
    count_fractional,
)
from gspcover.core.lp.simplex import solve_to_basic_optimum

__all__ = [
    'BasicSolution',
    'Constraint',
    'LinearProgram',
    'LPStatus',
    'Relation',
    'count_fractional',
    'solve_to_basic_optimum',
]
