"""Quasi-polynomial approximation scheme for UFP-cover."""

from gspcover.core.ufp.candidates import (
    CandidateSet,
    ProfileCover,
    augment_edge_tasks,
    build_group_candidates,
    cover_profile_lp,
)
from gspcover.core.ufp.groups import TaskGroup, group_tasks
from gspcover.core.ufp.preprocess import PreprocessResult, preprocess
from gspcover.core.ufp.profiles import (
    ApproxProfile,
    count_approx_profiles,
    enumerate_approx_profiles,
    height_levels,
)
from gspcover.core.ufp.qptas import (
    QptasResult,
    budget_grid,
    group_guarantee,
    qptas_guarantee,
    solve_qptas,
)
from gspcover.core.ufp.recursion import RecursionStats, ufp_cover_recursive

__all__ = [
    'CandidateSet',
    'ProfileCover',
    'augment_edge_tasks',
    'build_group_candidates',
    'cover_profile_lp',
    'TaskGroup',
    'group_tasks',
    'PreprocessResult',
    'preprocess',
    'ApproxProfile',
    'count_approx_profiles',
    'enumerate_approx_profiles',
    'height_levels',
    'QptasResult',
    'budget_grid',
    'group_guarantee',
    'qptas_guarantee',
    'solve_qptas',
    'RecursionStats',
    'ufp_cover_recursive',
]
