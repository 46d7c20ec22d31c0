"""Solver result records shared by the oracles and the approximation schemes."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from gspcover.core.model.edd import DueDateAssignment
from gspcover.core.model.instances import UfpTask
from gspcover.core.model.schedule import Schedule


@dataclass(frozen=True)
class CoverSolution:
    """A UFP-cover task set with its cost.
    
    Attributes:
        tasks: Chosen tasks ordered by id
        cost: Total cost
        stats: Counters reported by the solver (cap hits, budgets tried, ...)
    """
    
    tasks: Tuple[UfpTask, ...]
    cost: Fraction
    stats: Dict[str, int] = field(default_factory=dict, compare=False)
    
    def __post_init__(self) -> None:
        object.__setattr__(self, "tasks", tuple(sorted(self.tasks, key=lambda task: task.id)))
    
    @property
    def ids(self) -> Tuple[str, ...]:
        """Sorted ids of the chosen tasks."""
        return tuple(task.id for task in self.tasks)


@dataclass(frozen=True)
class ScheduleSolution:
    """A schedule with its total cost."""
    
    schedule: Schedule
    cost: Fraction


@dataclass(frozen=True)
class DueDateSolution:
    """A feasible due date assignment with its total cost."""
    
    assignment: DueDateAssignment
    cost: Fraction
