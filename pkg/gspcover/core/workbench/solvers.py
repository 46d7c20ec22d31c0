"""Uniform front end over every solver and oracle.

Each entry of SOLVERS takes an instance, eps and an optional cap and returns
a SolverOutcome whose payload is ready for JSON.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Union

from gspcover.core.fewclass import fewclass_guarantee, solve_few_classes
from gspcover.core.model.edd import edd_feasible
from gspcover.core.model.instances import GspInstance, UfpCoverInstance
from gspcover.core.model.profile import is_feasible_cover
from gspcover.core.model.schedule import Schedule, validate_schedule
from gspcover.core.oracles import exact_due_dates, exact_gsp_uniform_release, exact_ufp_cover
from gspcover.core.reduction import solve_e_approx
from gspcover.core.speedup import solve_speedup, validate_speed_schedule
from gspcover.core.ufp import qptas_guarantee, solve_qptas
from gspcover.exceptions import InvalidParameterError
from gspcover.utils.serialization import encode_rational
from gspcover.utils.validation.caps import (
    DEFAULT_COMBINATION_CAP,
    DEFAULT_DUE_DATE_CAP,
    DEFAULT_GSP_ORACLE_CAP,
    DEFAULT_GUESS_CAP,
    DEFAULT_PATTERN_CAP,
    DEFAULT_UFP_ORACLE_CAP,
)

logger = logging.getLogger(__name__)

Instance = Union[UfpCoverInstance, GspInstance]


@dataclass(frozen=True)
class SolverOutcome:
    """What a solver produced on one instance.

    Attributes:
        solver: Solver name
        cost: Objective value, None when the solver found nothing
        feasible: True when the output passed its feasibility check
        guarantee: Ratio bound of the solver, 1 for exact solvers
        speed: Machine speed of the schedule, None for unit speed or covers
        payload: JSON-ready description of the solution
        stats: Solver counters
    """

    solver: str
    cost: Optional[Fraction]
    feasible: bool
    guarantee: Optional[Fraction]
    speed: Optional[Fraction] = None
    payload: Dict[str, Any] = field(default_factory=dict)
    stats: Dict[str, int] = field(default_factory=dict, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        def rational(value: Optional[Fraction]) -> Any:
            return None if value is None else encode_rational(value)

        return {
            "solver": self.solver,
            "cost": rational(self.cost),
            "feasible": self.feasible,
            "guarantee": rational(self.guarantee),
            "speed": rational(self.speed),
            "solution": self.payload,
            "stats": dict(self.stats),
        }


def _schedule_payload(schedule: Schedule) -> Dict[str, Any]:
    return {
        "starts": [[job_id, encode_rational(start)] for job_id, start in schedule.starts],
        "speed": encode_rational(schedule.speed),
    }


def _nothing(name: str, guarantee: Optional[Fraction]) -> SolverOutcome:
    return SolverOutcome(name, None, False, guarantee, payload={"status": "infeasible"})


def integer_due_dates(inst: GspInstance) -> range:
    """Every integral time from the earliest completion to the horizon."""
    if inst.n == 0:
        return range(0)
    return range(min(job.r + job.p for job in inst.jobs), inst.horizon + 1)


def _run_qptas(inst: UfpCoverInstance, eps: Fraction, cap: Optional[int]) -> SolverOutcome:
    guarantee = qptas_guarantee(eps)
    result = solve_qptas(inst, eps, combination_cap=cap or DEFAULT_COMBINATION_CAP)
    if result is None:
        return _nothing("qptas", guarantee)
    return SolverOutcome(
        "qptas", result.cost, is_feasible_cover(inst, result.tasks), guarantee,
        payload={"tasks": list(result.cover.ids), "budget": encode_rational(result.budget),
                 "accepted": result.accepted},
        stats=dict(result.stats),
    )


def _run_exact_ufp(inst: UfpCoverInstance, eps: Fraction, cap: Optional[int]) -> SolverOutcome:
    solution = exact_ufp_cover(inst, cap=cap or DEFAULT_UFP_ORACLE_CAP)
    if solution is None:
        return _nothing("exact-ufp", Fraction(1))
    return SolverOutcome(
        "exact-ufp", solution.cost, is_feasible_cover(inst, solution.tasks), Fraction(1),
        payload={"tasks": list(solution.ids)},
    )


def _run_e_approx(inst: GspInstance, eps: Fraction, cap: Optional[int]) -> SolverOutcome:
    kwargs = {} if cap is None else {"oracle_cap": cap}
    result = solve_e_approx(inst, eps, **kwargs)
    if result is None:
        return _nothing("e-approx", None)
    valid, _ = validate_schedule(inst, result.schedule)
    payload = _schedule_payload(result.schedule)
    payload["alpha"] = encode_rational(result.alpha)
    payload["cover_cost"] = encode_rational(result.cover_cost)
    return SolverOutcome(
        "e-approx", result.cost, valid, Fraction(result.guarantee), payload=payload,
    )


def _run_speedup(inst: GspInstance, eps: Fraction, cap: Optional[int]) -> SolverOutcome:
    result = solve_speedup(inst, eps, cap=cap or DEFAULT_PATTERN_CAP)
    if result is None:
        return _nothing("speedup", Fraction(1))
    valid = validate_speed_schedule(inst, result.schedule, result.speed)
    payload = _schedule_payload(result.schedule)
    payload["exponent"] = result.exponent
    payload["breakdown"] = dict(result.breakdown)
    payload["rounded_cost"] = encode_rational(result.rounded_cost)
    payload["frame_condition"] = result.frame_condition
    return SolverOutcome(
        "speedup", result.cost, valid, Fraction(1), result.speed, payload, dict(result.stats),
    )


def _run_fewclass(inst: GspInstance, eps: Fraction, cap: Optional[int]) -> SolverOutcome:
    guarantee = fewclass_guarantee(eps)
    result = solve_few_classes(inst, eps, guess_cap=cap or DEFAULT_GUESS_CAP)
    if result is None:
        return _nothing("fewclass", guarantee)
    valid = edd_feasible(inst.jobs, result.assignment)
    payload: Dict[str, Any] = {
        "due_dates": [[job_id, encode_rational(d)] for job_id, d in result.assignment.dates],
        "rounded_cost": encode_rational(result.cost),
        "budget": encode_rational(result.budget),
        "accepted": result.accepted,
        "preemptive": result.schedule is None,
    }
    return SolverOutcome(
        "fewclass", result.true_cost, valid, guarantee, payload=payload, stats=dict(result.stats),
    )


def _run_exact_gsp(inst: GspInstance, eps: Fraction, cap: Optional[int]) -> SolverOutcome:
    solution = exact_gsp_uniform_release(inst, cap=cap or DEFAULT_GSP_ORACLE_CAP)
    if solution is None:
        return _nothing("exact-gsp", Fraction(1))
    valid, _ = validate_schedule(inst, solution.schedule)
    return SolverOutcome(
        "exact-gsp", solution.cost, valid, Fraction(1), payload=_schedule_payload(solution.schedule),
    )


def _run_exact_due_dates(inst: GspInstance, eps: Fraction, cap: Optional[int]) -> SolverOutcome:
    solution = exact_due_dates(inst, integer_due_dates(inst), cap=cap or DEFAULT_DUE_DATE_CAP)
    if solution is None:
        return _nothing("exact-due-dates", Fraction(1))
    return SolverOutcome(
        "exact-due-dates", solution.cost, edd_feasible(inst.jobs, solution.assignment), Fraction(1),
        payload={"due_dates": [
            [job_id, encode_rational(d)] for job_id, d in solution.assignment.dates
        ]},
    )


Runner = Callable[[Any, Fraction, Optional[int]], SolverOutcome]

# name -> (instance kind, runner)
SOLVERS: Dict[str, tuple] = {
    "qptas": ("ufp-cover", _run_qptas),
    "exact-ufp": ("ufp-cover", _run_exact_ufp),
    "e-approx": ("gsp", _run_e_approx),
    "speedup": ("gsp", _run_speedup),
    "fewclass": ("gsp", _run_fewclass),
    "exact-gsp": ("gsp", _run_exact_gsp),
    "exact-due-dates": ("gsp", _run_exact_due_dates),
}


def solver_kind(name: str) -> str:
    """Instance kind a solver works on.

    Raises:
        InvalidParameterError: For an unknown solver
    """
    if name not in SOLVERS:
        raise InvalidParameterError(f"Unknown solver: {name} (choose from {', '.join(SOLVERS)})")
    return SOLVERS[name][0]


def _kind_of(inst: Instance) -> str:
    return "ufp-cover" if isinstance(inst, UfpCoverInstance) else "gsp"


def run_solver(name: str, inst: Instance, eps: Fraction, cap: Optional[int] = None) -> SolverOutcome:
    """Run a named solver.

    Raises:
        InvalidParameterError: For an unknown solver or an instance of the wrong kind
    """
    kind = solver_kind(name)
    if _kind_of(inst) != kind:
        raise InvalidParameterError(f"Solver {name} needs a {kind} instance, got {_kind_of(inst)}")
    logger.debug("running %s with eps=%s cap=%s", name, eps, cap)
    return SOLVERS[name][1](inst, eps, cap)


def oracle_for(inst: Instance) -> str:
    """Exact solver used as the reference for an instance."""
    if isinstance(inst, UfpCoverInstance):
        return "exact-ufp"
    return "exact-gsp" if inst.is_uniform_release else "exact-due-dates"


def run_oracle(inst: Instance, cap: Optional[int] = None) -> SolverOutcome:
    return run_solver(oracle_for(inst), inst, Fraction(1), cap)
