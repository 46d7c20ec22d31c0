"""Middle-edge recursion for UFP-cover.

On the subpath [lo, hi) the tasks crossing the middle edge M form T_M. One
candidate per group of T_M is chosen, T_M leaves the instance, and the two
sides are solved independently on the residual demands. Coverage vectors are
truncated at the residual demand so that a candidate dominated on the
subpath by a cheaper one can be dropped without losing any solution.
"""

import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import ceil
from typing import Dict, List, Optional, Sequence, Tuple

from gspcover.core.model.instances import UfpCoverInstance, UfpTask
from gspcover.core.model.numeric import Number, to_fraction
from gspcover.core.model.profile import induced_heights
from gspcover.core.model.results import CoverSolution
from gspcover.core.oracles.ufp import exact_ufp_cover, knapsack_cover_bound
from gspcover.core.ufp.candidates import build_group_candidates
from gspcover.core.ufp.groups import group_tasks
from gspcover.exceptions import InvalidParameterError
from gspcover.utils.validation.caps import (
    DEFAULT_COMBINATION_CAP,
    DEFAULT_GROUP_CANDIDATE_CAP,
    DEFAULT_UFP_ORACLE_CAP,
)

logger = logging.getLogger(__name__)

Heights = Tuple[Fraction, ...]


@dataclass
class RecursionStats:
    """Counters collected over one recursion tree."""

    calls: int = 0
    base_cases: int = 0
    groups: int = 0
    candidates: int = 0
    combinations: int = 0
    group_cap_hits: int = 0
    combination_cap_hits: int = 0

    def as_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class _Partial:
    cost: Fraction
    tasks: Tuple[UfpTask, ...]
    heights: Heights

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(sorted(task.id for task in self.tasks))


def _capped(heights: Sequence[Fraction], residual: Heights) -> Heights:
    return tuple(min(h, r) for h, r in zip(heights, residual))


def _pareto(items: List[_Partial]) -> List[_Partial]:
    items = sorted(items, key=lambda item: (item.cost, item.ids))
    kept: List[_Partial] = []
    for item in items:
        if any(all(a >= b for a, b in zip(other.heights, item.heights)) for other in kept):
            continue
        kept.append(item)
    return kept


def _truncate(items: List[_Partial], cap: int) -> Tuple[List[_Partial], bool]:
    """Keep the cap cheapest items, one of them covering as much as any."""
    if len(items) <= cap:
        return items, False
    target = tuple(max(column) for column in zip(*(item.heights for item in items)))
    widest = next((item for item in items if item.heights == target), None)
    if widest is None:
        widest = max(items, key=lambda item: sum(item.heights))
    kept = items[: max(cap - 1, 0)]
    if widest not in kept:
        kept.append(widest)
    return kept, True


def _edge_bound(lo: int, residual: Heights, tasks: Sequence[UfpTask]) -> Optional[Fraction]:
    bound = Fraction(0)
    for offset, need in enumerate(residual):
        if need <= 0:
            continue
        edge = lo + offset
        edge_bound = knapsack_cover_bound([task for task in tasks if task.covers(edge)], need)
        if edge_bound is None:
            return None
        bound = max(bound, edge_bound)
    return bound


def _single_edge(edge: int, need: Fraction, tasks: Sequence[UfpTask]) -> Optional[CoverSolution]:
    crossing = [task for task in tasks if task.covers(edge)]
    local = UfpCoverInstance(
        1,
        (ceil(need),),
        tuple(UfpTask(task.id, 0, 1, task.p, task.c) for task in crossing),
    )
    solution = exact_ufp_cover(local, cap=max(DEFAULT_UFP_ORACLE_CAP, len(crossing)))
    if solution is None:
        return None
    by_id = {task.id: task for task in crossing}
    return CoverSolution(tuple(by_id[task_id] for task_id in solution.ids), solution.cost)


def ufp_cover_recursive(
    lo: int,
    hi: int,
    residual: Sequence[Number],
    tasks: Sequence[UfpTask],
    eps: Number,
    group_cap: int = DEFAULT_GROUP_CANDIDATE_CAP,
    combination_cap: int = DEFAULT_COMBINATION_CAP,
    compress: bool = True,
    stats: Optional[RecursionStats] = None,
) -> Optional[CoverSolution]:
    """Cover residual demands on edges lo..hi-1 with tasks inside the subpath.

    Args:
        lo: First edge
        hi: One past the last edge
        residual: Residual demand per edge of the subpath
        tasks: Available tasks, all within [lo, hi]
        eps: Accuracy parameter
        group_cap: Candidates kept per group after pruning
        combination_cap: Partial combinations kept after each merge
        compress: Enumerate profiles per coverage class
        stats: Counters to update in place

    Returns:
        CoverSolution or None when the residual demands cannot be met

    Raises:
        InvalidParameterError: If the residual vector does not match the subpath
    """
    eps = to_fraction(eps)
    if stats is None:
        stats = RecursionStats()
    stats.calls += 1
    if len(residual) != max(hi - lo, 0):
        raise InvalidParameterError(
            f"Expected {max(hi - lo, 0)} residual demands, got {len(residual)}"
        )
    needs: Heights = tuple(max(to_fraction(r), Fraction(0)) for r in residual)
    if hi <= lo or all(need == 0 for need in needs):
        return CoverSolution((), Fraction(0))
    if hi - lo == 1:
        stats.base_cases += 1
        return _single_edge(lo, needs[0], tasks)

    middle = lo + (hi - lo) // 2
    crossing = [task for task in tasks if task.s <= middle < task.t]
    left_tasks = [task for task in tasks if task.t <= middle]
    right_tasks = [task for task in tasks if task.s > middle]

    partials = [_Partial(Fraction(0), (), (Fraction(0),) * (hi - lo))]
    for group in group_tasks(crossing, eps):
        stats.groups += 1
        options = []
        for candidate in build_group_candidates(group, eps, lo, hi, middle, compress):
            heights = _capped(induced_heights(candidate.tasks, lo, hi), needs)
            options.append(_Partial(candidate.cost, candidate.tasks, heights))
        stats.candidates += len(options)
        options, hit = _truncate(_pareto(options), group_cap)
        if hit:
            stats.group_cap_hits += 1
            logger.warning("group %s: candidate cap %d reached", group.key, group_cap)

        merged = [
            _Partial(
                a.cost + b.cost,
                a.tasks + b.tasks,
                _capped([x + y for x, y in zip(a.heights, b.heights)], needs),
            )
            for a in partials
            for b in options
        ]
        partials, hit = _truncate(_pareto(merged), combination_cap)
        if hit:
            stats.combination_cap_hits += 1
            logger.warning("subpath [%d, %d): combination cap %d reached", lo, hi, combination_cap)

    pivot = middle - lo
    feasible = [item for item in partials if item.heights[pivot] >= needs[pivot]]
    stats.combinations += len(feasible)

    best: Optional[CoverSolution] = None
    for item in feasible:
        if best is not None and item.cost >= best.cost:
            break
        left_needs = tuple(n - h for n, h in zip(needs[:pivot], item.heights[:pivot]))
        right_needs = tuple(n - h for n, h in zip(needs[pivot + 1:], item.heights[pivot + 1:]))
        left_bound = _edge_bound(lo, left_needs, left_tasks)
        right_bound = _edge_bound(middle + 1, right_needs, right_tasks)
        if left_bound is None or right_bound is None:
            continue
        if best is not None and item.cost + left_bound + right_bound >= best.cost:
            continue
        left = ufp_cover_recursive(
            lo, middle, left_needs, left_tasks, eps, group_cap, combination_cap, compress, stats
        )
        if left is None:
            continue
        right = ufp_cover_recursive(
            middle + 1, hi, right_needs, right_tasks, eps, group_cap, combination_cap,
            compress, stats,
        )
        if right is None:
            continue
        total = item.cost + left.cost + right.cost
        if best is None or total < best.cost:
            best = CoverSolution(item.tasks + left.tasks + right.tasks, total)
    return best
