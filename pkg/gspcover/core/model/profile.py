"""Demand profiles, domination and cover feasibility."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from gspcover.core.model.instances import UfpCoverInstance, UfpTask
from gspcover.exceptions import InvalidInstanceError, InvalidParameterError


@dataclass(frozen=True)
class DemandProfile:
    """Per-edge heights, either required (demands) or induced by a task set."""

    heights: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "heights", tuple(Fraction(h) for h in self.heights))

    def __len__(self) -> int:
        return len(self.heights)

    def __getitem__(self, edge: int) -> Fraction:
        return self.heights[edge]

    def __add__(self, other: "DemandProfile") -> "DemandProfile":
        _check_lengths(self, other)
        return DemandProfile(tuple(a + b for a, b in zip(self.heights, other.heights)))

    @classmethod
    def of_demands(cls, inst: UfpCoverInstance) -> "DemandProfile":
        """The demand vector of an instance as a profile."""
        return cls(tuple(Fraction(u) for u in inst.demands))


def induced_heights(tasks: Iterable[UfpTask], lo: int, hi: int) -> Tuple[Fraction, ...]:
    """Heights induced on the edges lo..hi-1 by the tasks' sizes."""
    heights = [Fraction(0)] * (hi - lo)
    for task in tasks:
        for edge in range(max(task.s, lo), min(task.t, hi)):
            heights[edge - lo] += task.p
    return tuple(heights)


def induced_profile(tasks: Iterable[UfpTask], m: int) -> DemandProfile:
    """Profile Q_T of a task set on a path with m edges.

    Args:
        tasks: Chosen tasks
        m: Number of edges

    Returns:
        DemandProfile: heights(e) = sum of sizes of tasks containing e

    Raises:
        InvalidInstanceError: If a task leaves the path

    Example:
        >>> a = UfpTask("a", 0, 3, 1, 1)
        >>> b = UfpTask("b", 0, 2, 2, 2)
        >>> induced_profile([a, b], 3).heights
        (Fraction(3, 1), Fraction(3, 1), Fraction(1, 1))
    """
    tasks = list(tasks)
    for task in tasks:
        if task.t > m:
            raise InvalidInstanceError(f"Task {task.id} leaves a path of {m} edges")
    return DemandProfile(induced_heights(tasks, 0, m))


def _check_lengths(p1: DemandProfile, p2: DemandProfile) -> None:
    if len(p1) != len(p2):
        raise InvalidParameterError(
            f"Profiles have different lengths ({len(p1)} vs {len(p2)})"
        )


def dominates(p1: DemandProfile, p2: DemandProfile) -> bool:
    """True iff p1(e) >= p2(e) on every edge.

    Raises:
        InvalidParameterError: If the profiles have different lengths
    """
    _check_lengths(p1, p2)
    return all(a >= b for a, b in zip(p1.heights, p2.heights))


def covers_heights(covered: Sequence[Fraction], required: Sequence[Fraction]) -> bool:
    """Componentwise comparison on raw height vectors."""
    return all(a >= b for a, b in zip(covered, required))


def is_feasible_cover(inst: UfpCoverInstance, chosen: Iterable[UfpTask]) -> bool:
    """True iff the chosen tasks meet every edge demand."""
    return dominates(induced_profile(chosen, inst.m), DemandProfile.of_demands(inst))


def cover_cost(tasks: Iterable[UfpTask]) -> Fraction:
    """Total cost of a task set."""
    return sum((task.c for task in tasks), Fraction(0))
