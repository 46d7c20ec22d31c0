"""Exact solvers used as ground truth."""

from gspcover.core.oracles.gsp import exact_due_dates, exact_gsp_uniform_release
from gspcover.core.oracles.ufp import exact_ufp_cover, knapsack_cover_bound

__all__ = [
    'exact_due_dates',
    'exact_gsp_uniform_release',
    'exact_ufp_cover',
    'knapsack_cover_bound',
]
