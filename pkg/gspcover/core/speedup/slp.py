"""Slot assignment LP and its matching-based rounding.

Variables: x[s, j] puts job j in slot s, y[t, j] puts it in the window of
interval t. Rows: every job assigned once, every slot used at most once,
every window filled up to its length with the jobs' compressed processing
times. A pair is only admissible when the job's artificial release is
before the slot (or interval) begins and the job fits: into the slot, or
below eps * |I_t| for a window.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, lcm
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from gspcover.core.lp import BasicSolution, LinearProgram, Relation
from gspcover.core.model.instances import Job
from gspcover.core.model.numeric import to_fraction
from gspcover.core.speedup.grid import IntervalGrid, round_completion
from gspcover.core.speedup.layout import SlotLayout
from gspcover.exceptions import CostUnavailableError, RoundingError

logger = logging.getLogger(__name__)

# float64 represents every integer below this exactly
EXACT_FLOAT_LIMIT = 2 ** 53


@dataclass(frozen=True)
class SpeedupJob:
    """A job as the LP sees it.

    Attributes:
        job: Original job
        q: Compressed processing time
        release: Artificial release r(j), never before the real release
    """

    job: Job
    q: Fraction
    release: Fraction

    @property
    def id(self) -> int:
        return self.job.id


@dataclass
class SlpModel:
    """The LP together with its variable bookkeeping."""

    lp: LinearProgram
    layout: SlotLayout
    jobs: Tuple[SpeedupJob, ...]
    grid: IntervalGrid
    x_index: Dict[Tuple[int, int], int] = field(default_factory=dict)
    y_index: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def options(self, job_id: int) -> List[Tuple[str, int, Fraction]]:
        """Admissible (kind, slot index or interval, cost) triples of a job."""
        found = []
        for (s, j), var in self.x_index.items():
            if j == job_id:
                found.append(("slot", s, self.lp.objective[var]))
        for (t, j), var in self.y_index.items():
            if j == job_id:
                found.append(("window", t, self.lp.objective[var]))
        return found

    def cheapest_bound(self) -> Optional[Fraction]:
        """Sum over jobs of their cheapest admissible option; None if a job has none."""
        total = Fraction(0)
        for job in self.jobs:
            costs = [cost for _, _, cost in self.options(job.id)]
            if not costs:
                return None
            total += min(costs)
        return total


@dataclass(frozen=True)
class SlotAssignment:
    """Integral assignment of jobs to slots and windows.

    Attributes:
        slots: job id -> slot index
        windows: job id -> interval index
        cost: Total cost under the LP objective
        load: interval index -> compressed volume placed in its window
        overflow: interval index -> load beyond the window length (0 if none)
    """

    slots: Dict[int, int]
    windows: Dict[int, int]
    cost: Fraction
    load: Dict[int, Fraction]
    overflow: Dict[int, Fraction]


def _slot_cost(job: Job, end: Fraction, eps: Fraction) -> Optional[Fraction]:
    try:
        return job.cost(round_completion(end, eps))
    except CostUnavailableError:
        return None


def _window_cost(job: Job, t: int, grid: IntervalGrid) -> Optional[Fraction]:
    try:
        return job.cost(grid.start(t + 1))
    except CostUnavailableError:
        return None


def build_slp(
    layout: SlotLayout, jobs: Sequence[SpeedupJob], grid: IntervalGrid
) -> SlpModel:
    """LP of a layout.

    Slot pairs cost f_j at the rounded slot end; window pairs cost
    f_j(R_{t+1}).

    Example:
        >>> model = build_slp(SlotLayout((Slot(a, b),)), [job], grid)
        >>> model.lp.row_count  # one assignment row, one slot row
        2
    """
    eps = grid.eps
    lp = LinearProgram()
    model = SlpModel(lp, layout, tuple(jobs), grid)

    for s, slot in enumerate(layout.slots):
        for job in jobs:
            if job.release > slot.beg or job.q > slot.size:
                continue
            cost = _slot_cost(job.job, slot.end, eps)
            if cost is None:
                continue
            model.x_index[(s, job.id)] = lp.add_variable(f"x[{s},{job.id}]", cost)
    for window in layout.windows:
        if window.rem <= 0:
            continue
        interval_start = grid.start(window.t)
        for job in jobs:
            if job.release > interval_start or job.q > eps * grid.length(window.t):
                continue
            cost = _window_cost(job.job, window.t, grid)
            if cost is None:
                continue
            model.y_index[(window.t, job.id)] = lp.add_variable(f"y[{window.t},{job.id}]", cost)

    for job in jobs:
        row = {var: 1 for (_, j), var in model.x_index.items() if j == job.id}
        row.update({var: 1 for (_, j), var in model.y_index.items() if j == job.id})
        lp.add_constraint(row, Relation.EQ, 1, name=f"assign[{job.id}]")
    for s in range(len(layout.slots)):
        row = {var: 1 for (slot, _), var in model.x_index.items() if slot == s}
        if row:
            lp.add_constraint(row, Relation.LE, 1, name=f"slot[{s}]")
    q_of = {job.id: job.q for job in jobs}
    for window in layout.windows:
        row = {var: q_of[j] for (t, j), var in model.y_index.items() if t == window.t}
        if row:
            lp.add_constraint(row, Relation.LE, window.rem, name=f"window[{window.t}]")

    logger.debug(
        "sLP: %d slots, %d windows, %d variables, %d rows",
        len(layout.slots), len(layout.windows), lp.variable_count, lp.row_count,
    )
    return model


def _integral_assignment(model: SlpModel, values: Sequence[Fraction]) -> Tuple[Dict, Dict]:
    slots, windows = {}, {}
    for (s, j), var in model.x_index.items():
        if values[var] == 1:
            slots[j] = s
    for (t, j), var in model.y_index.items():
        if values[var] == 1:
            windows[j] = t
    return slots, windows


def _window_vertices(model: SlpModel, values: Sequence[Fraction]) -> List[Tuple[int, Dict[int, Fraction]]]:
    """Split each window's fractional load into ceil(sum y) unit vertices.

    Jobs are poured in by nonincreasing q (ties by id), so every job on a
    vertex is no longer than any job on the previous vertex.
    """
    vertices = []
    q_of = {job.id: job.q for job in model.jobs}
    for window in model.layout.windows:
        shares = [
            (j, values[var]) for (t, j), var in model.y_index.items()
            if t == window.t and values[var] > 0
        ]
        if not shares:
            continue
        shares.sort(key=lambda share: (-q_of[share[0]], share[0]))
        count = ceil(sum(value for _, value in shares))
        fills: List[Dict[int, Fraction]] = [{} for _ in range(count)]
        current, room = 0, Fraction(1)
        for j, value in shares:
            while value > 0:
                take = min(value, room)
                fills[current][j] = fills[current].get(j, Fraction(0)) + take
                value -= take
                room -= take
                if room == 0 and current + 1 < count:
                    current, room = current + 1, Fraction(1)
        vertices.extend((window.t, fill) for fill in fills)
    return vertices


def round_slp(model: SlpModel, solution: BasicSolution) -> SlotAssignment:
    """Round an optimal sLP vertex to an integral assignment.

    Integral vertices are read off directly. Otherwise each job is matched
    to a slot it fractionally uses or to a window vertex it is poured into,
    by a minimum-cost perfect matching on the jobs. The fractional solution
    is a fractional matching of the same cost, so the matching costs no
    more, and each window overflows by at most its longest admissible job.

    Raises:
        RoundingError: If a post-condition fails
    """
    values = solution.values
    if all(value.denominator == 1 for value in values):
        slots, windows = _integral_assignment(model, values)
    else:
        slots, windows = _match(model, values)
    assignment = _assignment(model, slots, windows)
    _check_rounding(model, assignment, solution.objective)
    return assignment


def _match(model: SlpModel, values: Sequence[Fraction]) -> Tuple[Dict, Dict]:
    jobs = [job.id for job in model.jobs]
    columns: List[Tuple[str, int, Dict[int, Fraction]]] = []
    for s in range(len(model.layout.slots)):
        support = {
            j: values[var] for (slot, j), var in model.x_index.items()
            if slot == s and values[var] > 0
        }
        if support:
            columns.append(("slot", s, support))
    for t, fill in _window_vertices(model, values):
        columns.append(("window", t, fill))

    costs: Dict[Tuple[int, int], Fraction] = {}
    for c, (kind, where, support) in enumerate(columns):
        for r, j in enumerate(jobs):
            if j not in support:
                continue
            var = model.x_index[(where, j)] if kind == "slot" else model.y_index[(where, j)]
            costs[(r, c)] = model.lp.objective[var]

    scale = 1
    for cost in costs.values():
        scale = lcm(scale, cost.denominator)
    scaled = {key: cost.numerator * (scale // cost.denominator) for key, cost in costs.items()}
    sentinel = sum(scaled.values()) + 1
    if sentinel >= EXACT_FLOAT_LIMIT:
        logger.warning("matching costs exceed exact float range; using approximate weights")
        matrix = np.full((len(jobs), len(columns)), float(sum(costs.values()) + 1))
        for (r, c), cost in costs.items():
            matrix[r, c] = float(cost)
    else:
        matrix = np.full((len(jobs), len(columns)), float(sentinel))
        for (r, c), value in scaled.items():
            matrix[r, c] = float(value)

    rows, cols = linear_sum_assignment(matrix)
    slots, windows = {}, {}
    for r, c in zip(rows, cols):
        if (r, c) not in costs:
            raise RoundingError(f"Job {jobs[r]} could only be matched through a non-edge")
        kind, where, _ = columns[c]
        if kind == "slot":
            slots[jobs[r]] = where
        else:
            windows[jobs[r]] = where
    return slots, windows


def _assignment(model: SlpModel, slots: Dict[int, int], windows: Dict[int, int]) -> SlotAssignment:
    cost = Fraction(0)
    load: Dict[int, Fraction] = {w.t: Fraction(0) for w in model.layout.windows}
    q_of = {job.id: job.q for job in model.jobs}
    for j, s in slots.items():
        cost += model.lp.objective[model.x_index[(s, j)]]
    for j, t in windows.items():
        cost += model.lp.objective[model.y_index[(t, j)]]
        load[t] += q_of[j]
    overflow = {
        w.t: max(load[w.t] - w.rem, Fraction(0)) for w in model.layout.windows
    }
    return SlotAssignment(dict(slots), dict(windows), cost, load, overflow)


def _check_rounding(model: SlpModel, assignment: SlotAssignment, lp_cost: Fraction) -> None:
    for job in model.jobs:
        placed = (job.id in assignment.slots) + (job.id in assignment.windows)
        if placed != 1:
            raise RoundingError(f"Job {job.id} assigned {placed} times")
    used = list(assignment.slots.values())
    if len(used) != len(set(used)):
        raise RoundingError("A slot holds more than one job")
    for j, s in assignment.slots.items():
        if (s, j) not in model.x_index:
            raise RoundingError(f"Job {j} placed in inadmissible slot {s}")
    for j, t in assignment.windows.items():
        if (t, j) not in model.y_index:
            raise RoundingError(f"Job {j} placed in inadmissible window {t}")
    for window in model.layout.windows:
        if assignment.overflow[window.t] > model.grid.length(window.t) * model.grid.eps:
            raise RoundingError(f"Window {window.t} overflows by {assignment.overflow[window.t]}")
    if assignment.cost > to_fraction(lp_cost):
        raise RoundingError(f"Rounded cost {assignment.cost} exceeds LP cost {lp_cost}")
