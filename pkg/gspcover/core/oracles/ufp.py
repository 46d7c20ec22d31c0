"""Exact UFP-cover by branch and bound.

Tasks are decided one at a time (include, then exclude). A node is pruned
when some edge can no longer be covered by the undecided tasks or when the
largest single-edge fractional knapsack bound already exceeds the incumbent.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from gspcover.core.model.instances import UfpCoverInstance, UfpTask
from gspcover.core.model.results import CoverSolution
from gspcover.utils.validation.caps import DEFAULT_UFP_ORACLE_CAP, enforce_cap

logger = logging.getLogger(__name__)


def knapsack_cover_bound(tasks: Sequence[UfpTask], need: Fraction) -> Optional[Fraction]:
    """Fractional minimum cost of covering one edge's residual demand.

    Sizes are capped at the demand, then tasks are taken greedily by cost
    per covered unit with the last one taken fractionally.

    Args:
        tasks: Tasks crossing the edge
        need: Residual demand of the edge

    Returns:
        Fraction or None when the tasks cannot reach the demand

    Example:
        >>> knapsack_cover_bound([UfpTask("a", 0, 1, 2, 4)], Fraction(1))
        Fraction(4, 1)
    """
    if need <= 0:
        return Fraction(0)
    items = sorted(
        ((task.c / min(task.p, need), min(task.p, need)) for task in tasks),
        key=lambda item: item[0],
    )
    bound = Fraction(0)
    remaining = need
    for rate, size in items:
        take = min(size, remaining)
        bound += rate * take
        remaining -= take
        if remaining == 0:
            return bound
    return None


def exact_ufp_cover(
    inst: UfpCoverInstance, cap: int = DEFAULT_UFP_ORACLE_CAP
) -> Optional[CoverSolution]:
    """Minimum-cost feasible cover.

    Among optimal covers the lexicographically smallest sorted id tuple wins.

    Args:
        inst: Instance to solve
        cap: Largest task count accepted

    Returns:
        CoverSolution or None when no subset of tasks covers the demands

    Raises:
        CapExceededError: If the instance has more than cap tasks

    Example:
        >>> exact_ufp_cover(u1).ids
        ('a', 'b')
    """
    enforce_cap("tasks", inst.n, cap)
    demands = [Fraction(u) for u in inst.demands]

    for edge, demand in enumerate(demands):
        if sum(task.p for task in inst.tasks if task.covers(edge)) < demand:
            logger.debug("edge %d cannot be covered", edge)
            return None

    # cheap-per-unit tasks first so a good incumbent appears early
    order = sorted(inst.tasks, key=lambda task: (task.c / task.p, task.id))
    suffix_positive = [True] * (len(order) + 1)
    for index in range(len(order) - 1, -1, -1):
        suffix_positive[index] = suffix_positive[index + 1] and order[index].c > 0

    best: List[Optional[Tuple[Fraction, Tuple[str, ...]]]] = [None]
    nodes = [0]

    def consider(cost: Fraction, chosen: List[UfpTask]) -> None:
        key = (cost, tuple(sorted(task.id for task in chosen)))
        if best[0] is None or key < best[0]:
            best[0] = key

    def lower_bound(index: int, residual: List[Fraction]) -> Optional[Fraction]:
        undecided = order[index:]
        bound = Fraction(0)
        for edge, need in enumerate(residual):
            if need <= 0:
                continue
            edge_bound = knapsack_cover_bound(
                [task for task in undecided if task.covers(edge)], need
            )
            if edge_bound is None:
                return None
            bound = max(bound, edge_bound)
        return bound

    def search(index: int, residual: List[Fraction], cost: Fraction, chosen: List[UfpTask]) -> None:
        nodes[0] += 1
        satisfied = all(need <= 0 for need in residual)
        if satisfied:
            consider(cost, chosen)
            if suffix_positive[index]:
                return
        if index == len(order):
            return
        bound = lower_bound(index, residual)
        if bound is None:
            return
        if best[0] is not None and cost + bound > best[0][0]:
            return

        task = order[index]
        useful = any(residual[edge] > 0 for edge in task.edges)
        if useful or task.c == 0:
            for edge in task.edges:
                residual[edge] -= task.p
            chosen.append(task)
            search(index + 1, residual, cost + task.c, chosen)
            chosen.pop()
            for edge in task.edges:
                residual[edge] += task.p
        search(index + 1, residual, cost, chosen)

    search(0, demands, Fraction(0), [])
    logger.debug("exact_ufp_cover visited %d nodes", nodes[0])

    if best[0] is None:
        return None
    cost, ids = best[0]
    chosen_tasks = tuple(inst.task(task_id) for task_id in ids)
    return CoverSolution(chosen_tasks, cost)
