"""Binary search over the budget B around preprocessing and recursion."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from gspcover.core.model.instances import UfpCoverInstance
from gspcover.core.model.numeric import Number, ceil_log, floor_log, to_fraction
from gspcover.core.model.profile import cover_cost, induced_profile, is_feasible_cover
from gspcover.core.model.results import CoverSolution
from gspcover.core.ufp.preprocess import preprocess
from gspcover.core.ufp.recursion import RecursionStats, ufp_cover_recursive
from gspcover.exceptions import InvalidCoverError, InvalidParameterError
from gspcover.utils.validation.caps import DEFAULT_COMBINATION_CAP, DEFAULT_GROUP_CANDIDATE_CAP

logger = logging.getLogger(__name__)


def group_guarantee(eps: Number) -> Fraction:
    """Per-group cost factor 1 + 2 eps (1+eps)(2+eps)."""
    eps = to_fraction(eps)
    return 1 + 2 * eps * (1 + eps) * (2 + eps)


def acceptance_factor(eps: Number) -> Fraction:
    """Slack allowed over a budget: (1+eps) for preprocessing times the group factor."""
    eps = to_fraction(eps)
    return (1 + eps) * group_guarantee(eps)


def qptas_guarantee(eps: Number) -> Fraction:
    """Overall ratio bound (1+eps) * (1 + 2 eps (1+eps)(2+eps)) * (1+eps).

    Example:
        >>> qptas_guarantee(Fraction(1, 2))
        Fraction(171, 16)
    """
    eps = to_fraction(eps)
    return acceptance_factor(eps) * (1 + eps)


def budget_grid(inst: UfpCoverInstance, eps: Number) -> List[Fraction]:
    """{0} plus powers of 1+eps from below the cheapest positive cost to above the total."""
    base = 1 + to_fraction(eps)
    positive = [task.c for task in inst.tasks if task.c > 0]
    grid = [Fraction(0)]
    if positive:
        low = floor_log(min(positive), base)
        high = ceil_log(sum(positive), base)
        grid.extend(base ** i for i in range(low, high + 1))
    return grid


@dataclass(frozen=True)
class QptasResult:
    """Cover found by the budget search.

    Attributes:
        cover: Feasible cover of the original instance
        budget: Smallest accepted budget B (the largest tried when none was accepted)
        accepted: True when the cover met the budget's acceptance bound
        guarantee: Ratio bound reported with the run
        stats: Recursion counters summed over all budgets tried
    """

    cover: CoverSolution
    budget: Fraction
    accepted: bool
    guarantee: Fraction
    stats: Dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def cost(self) -> Fraction:
        return self.cover.cost

    @property
    def tasks(self):
        return self.cover.tasks


def solve_qptas(
    inst: UfpCoverInstance,
    eps: Number,
    group_cap: int = DEFAULT_GROUP_CANDIDATE_CAP,
    combination_cap: int = DEFAULT_COMBINATION_CAP,
    compress: bool = True,
) -> Optional[QptasResult]:
    """(1+eps)-style approximation for UFP-cover.

    Binary search over the budget grid for the smallest B whose
    preprocess + recursion run returns a cover costing at most
    B (1+eps)(1 + 2 eps (1+eps)(2+eps)). The cheapest feasible cover seen
    over all budgets tried is returned, auto-selected tasks included.

    Args:
        inst: Instance to solve
        eps: Accuracy parameter in (0, 1]
        group_cap: Candidates kept per group
        combination_cap: Partial combinations kept per merge
        compress: Enumerate profiles per coverage class

    Returns:
        QptasResult or None when the instance is infeasible

    Raises:
        InvalidParameterError: If eps is outside (0, 1]
        InvalidCoverError: If the final cover fails the feasibility check
    """
    eps = to_fraction(eps)
    if not 0 < eps <= 1:
        raise InvalidParameterError(f"eps must lie in (0, 1], got {eps}")
    guarantee = qptas_guarantee(eps)

    if not is_feasible_cover(inst, inst.tasks):
        logger.debug("instance is infeasible even with every task")
        return None

    stats = RecursionStats()
    grid = budget_grid(inst, eps)
    best: List[Optional[CoverSolution]] = [None]
    attempts = [0]

    def attempt(budget: Fraction) -> bool:
        attempts[0] += 1
        pre = preprocess(inst, budget, eps)
        found = ufp_cover_recursive(
            0, inst.m, pre.reduced.demands, pre.reduced.tasks, eps,
            group_cap, combination_cap, compress, stats,
        )
        if found is None:
            logger.debug("budget %s: no cover", budget)
            return False
        tasks = found.tasks + pre.auto_selected
        total = cover_cost(tasks)
        if best[0] is None or total < best[0].cost:
            best[0] = CoverSolution(tasks, total)
        accepted = total <= budget * acceptance_factor(eps)
        logger.debug("budget %s: cover cost %s, accepted=%s", budget, total, accepted)
        return accepted

    lo, hi = 0, len(grid) - 1
    accepted_index: Optional[int] = None
    if attempt(grid[hi]):
        accepted_index = hi
        while lo < hi:
            mid = (lo + hi) // 2
            if attempt(grid[mid]):
                hi = mid
                accepted_index = mid
            else:
                lo = mid + 1

    if best[0] is None:
        return None
    cover = best[0]
    if not is_feasible_cover(inst, cover.tasks):
        profile = induced_profile(cover.tasks, inst.m)
        raise InvalidCoverError(f"Cover {cover.ids} leaves demand uncovered: {profile.heights}")

    run_stats = stats.as_dict()
    run_stats["budgets_tried"] = attempts[0]
    budget = grid[accepted_index] if accepted_index is not None else grid[-1]
    return QptasResult(
        CoverSolution(cover.tasks, cover.cost, run_stats),
        budget,
        accepted_index is not None,
        guarantee,
        run_stats,
    )
