"""Geometric grouping of the tasks crossing the middle edge."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from gspcover.core.model.instances import UfpTask
from gspcover.core.model.numeric import Number, floor_log, to_fraction
from gspcover.exceptions import InvalidParameterError


@dataclass(frozen=True)
class TaskGroup:
    """Tasks with (1+eps)^k <= c < (1+eps)^(k+1) and (1+eps)^l <= p < (1+eps)^(l+1).

    Zero-cost tasks have no cost exponent and share k = None.
    """

    k: Optional[int]
    l: int
    tasks: Tuple[UfpTask, ...]

    @property
    def key(self) -> Tuple[Optional[int], int]:
        return (self.k, self.l)

    def __len__(self) -> int:
        return len(self.tasks)


def group_key(task: UfpTask, eps: Number) -> Tuple[Optional[int], int]:
    """(k, l) exponents of a task for base 1 + eps."""
    base = 1 + to_fraction(eps)
    k = floor_log(task.c, base) if task.c > 0 else None
    return (k, floor_log(task.p, base))


def group_tasks(tasks: Sequence[UfpTask], eps: Number) -> List[TaskGroup]:
    """Partition tasks by cost and size exponents.

    Groups come out sorted by key (zero-cost group first) and members by id;
    empty groups never appear. At eps = 1/2, costs 1, 1.4 and 2.3 get cost
    exponents 0, 0 and 2.
    """
    if to_fraction(eps) <= 0:
        raise InvalidParameterError("eps must be positive")
    buckets: Dict[Tuple[Optional[int], int], List[UfpTask]] = {}
    for task in tasks:
        buckets.setdefault(group_key(task, eps), []).append(task)

    def order(key: Tuple[Optional[int], int]) -> Tuple[int, int, int]:
        k, l = key
        return (0 if k is None else 1, k or 0, l)

    return [
        TaskGroup(k, l, tuple(sorted(buckets[(k, l)], key=lambda task: task.id)))
        for k, l in sorted(buckets, key=order)
    ]
