"""Candidate task sets per group.

For a guessed optimum size g up to 1/eps^2 the candidates are all small
subsets. Above that, every approximate profile is covered by an extreme
point of a small LP (fractional variables rounded up) and the set is padded
with the tasks reaching furthest left and right.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, floor
from typing import Dict, List, Optional, Sequence, Tuple

from gspcover.core.lp import LinearProgram, Relation, count_fractional, solve_to_basic_optimum
from gspcover.core.model.instances import UfpTask
from gspcover.core.model.numeric import Number, to_fraction
from gspcover.core.model.profile import cover_cost
from gspcover.core.ufp.groups import TaskGroup
from gspcover.core.ufp.profiles import ApproxProfile, enumerate_approx_profiles
from gspcover.exceptions import RoundingError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProfileCover:
    """Rounded LP cover of one approximate profile."""

    tasks: Tuple[UfpTask, ...]
    cost: Fraction
    lp_cost: Fraction
    fractional_count: int
    row_count: int


@dataclass(frozen=True)
class CandidateSet:
    """One candidate choice of tasks from a group.

    Attributes:
        tasks: Members, ordered by id
        cost: Total cost
        key: (k, l) of the originating group
        g: Guessed optimum size that produced it (None for the full group)
        profile: Approximate profile behind an LP candidate
        source: "subset", "lp" or "full"
    """

    tasks: Tuple[UfpTask, ...]
    cost: Fraction
    key: Tuple[Optional[int], int]
    g: Optional[int]
    profile: Optional[ApproxProfile]
    source: str

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(task.id for task in self.tasks)


def cover_profile_lp(tasks: Sequence[UfpTask], profile: ApproxProfile) -> Optional[ProfileCover]:
    """Cheapest fractional cover of a profile, rounded up.

    The LP has x_i in [0, 1] per task and one row per distinct
    (e_L(h), h) and (e_R(h), h). Every positive x_i is rounded to 1.

    Args:
        tasks: Group tasks (all crossing the profile's middle edge)
        profile: Profile to cover

    Returns:
        ProfileCover or None when the LP is infeasible

    Raises:
        RoundingError: If the vertex has more fractional entries than rows

    Example:
        >>> cover = cover_profile_lp([], zero_profile)
        >>> cover.tasks, cover.cost
        ((), Fraction(0, 1))
    """
    tasks = sorted(tasks, key=lambda task: task.id)
    lp = LinearProgram()
    for task in tasks:
        lp.add_variable(task.id, cost=task.c, lo=0, hi=1)
    for edge, height in profile.cover_rows():
        coefficients = {i: task.p for i, task in enumerate(tasks) if task.covers(edge)}
        lp.add_constraint(coefficients, Relation.GE, height, name=f"e{edge}>={height}")

    solution = solve_to_basic_optimum(lp)
    if not solution.is_optimal:
        return None
    fractional = count_fractional(solution)
    if fractional > lp.row_count or fractional > 2 * len(profile.levels):
        raise RoundingError(
            f"Profile LP vertex has {fractional} fractional entries for {lp.row_count} rows"
        )
    chosen = tuple(task for task, value in zip(tasks, solution.values) if value > 0)
    return ProfileCover(chosen, cover_cost(chosen), solution.objective, fractional, lp.row_count)


def augment_edge_tasks(
    group: TaskGroup, chosen: Sequence[UfpTask], g: int, eps: Number
) -> Tuple[UfpTask, ...]:
    """Pad a rounded cover with the unchosen tasks reaching furthest out.

    Takes q = ceil(eps(1+eps)g) remaining tasks with the leftmost start,
    then q of the rest with the rightmost end; ties go to the smaller id.
    Fewer than 2q remaining tasks are all taken.
    """
    eps = to_fraction(eps)
    quota = ceil(eps * (1 + eps) * g)
    taken = {task.id for task in chosen}
    remaining = [task for task in group.tasks if task.id not in taken]
    left = sorted(remaining, key=lambda task: (task.s, task.id))[:quota]
    left_ids = {task.id for task in left}
    rest = [task for task in remaining if task.id not in left_ids]
    right = sorted(rest, key=lambda task: (-task.t, task.id))[:quota]
    return tuple(left) + tuple(right)


def small_guess_limit(eps: Number) -> int:
    """floor(1 / eps^2): guesses up to this size enumerate subsets directly."""
    eps = to_fraction(eps)
    return floor(1 / (eps * eps))


def build_group_candidates(
    group: TaskGroup,
    eps: Number,
    lo: Optional[int] = None,
    hi: Optional[int] = None,
    middle: Optional[int] = None,
    compress: bool = True,
) -> List[CandidateSet]:
    """Candidate task sets for one group.

    Args:
        group: Group of tasks crossing the middle edge
        eps: Accuracy parameter
        lo: First edge of the subpath (default: leftmost task start)
        hi: One past the last edge (default: rightmost task end)
        middle: Edge all tasks cross (default: the largest start)
        compress: Enumerate profiles per coverage class

    Returns:
        list: Distinct candidates; the full group is always among them
    """
    eps = to_fraction(eps)
    if not group.tasks:
        return [CandidateSet((), Fraction(0), group.key, 0, None, "subset")]
    if middle is None:
        middle = max(task.s for task in group.tasks)
    if lo is None:
        lo = min(task.s for task in group.tasks)
    if hi is None:
        hi = max(task.t for task in group.tasks)

    candidates: List[CandidateSet] = []
    seen: Dict[Tuple[str, ...], int] = {}

    def add(tasks: Sequence[UfpTask], g: Optional[int], profile, source: str) -> None:
        ordered = tuple(sorted(tasks, key=lambda task: task.id))
        ids = tuple(task.id for task in ordered)
        if ids in seen:
            return
        seen[ids] = len(candidates)
        candidates.append(CandidateSet(ordered, cover_cost(ordered), group.key, g, profile, source))

    small = small_guess_limit(eps)
    for size in range(min(small, len(group.tasks)) + 1):
        for subset in combinations(group.tasks, size):
            add(subset, size, None, "subset")

    lp_solves = 0
    for g in range(small + 1, len(group.tasks) + 1):
        for profile in enumerate_approx_profiles(group, g, eps, lo, hi, middle, compress):
            cover = cover_profile_lp(group.tasks, profile)
            lp_solves += 1
            if cover is None:
                continue
            extra = augment_edge_tasks(group, cover.tasks, g, eps)
            add(cover.tasks + extra, g, profile, "lp")

    add(group.tasks, None, None, "full")
    logger.debug(
        "group %s: %d tasks, %d candidates, %d profile LPs",
        group.key, len(group.tasks), len(candidates), lp_solves,
    )
    return candidates
