"""(e + eps)-approximation for uniform-release GSP through UFP-cover."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional, Tuple

import numpy as np

from gspcover.core.model.instances import GspInstance, UfpCoverInstance
from gspcover.core.model.numeric import Number, to_fraction
from gspcover.core.model.profile import cover_cost
from gspcover.core.model.results import CoverSolution
from gspcover.core.model.schedule import Schedule, schedule_cost
from gspcover.core.oracles.ufp import exact_ufp_cover
from gspcover.core.reduction.lift import lift_cover_to_schedule
from gspcover.core.reduction.params import DEFAULT_GAMMA, ReductionParams, grid_guarantee
from gspcover.core.reduction.reduce import reduce_gsp_to_ufp
from gspcover.core.ufp.qptas import qptas_guarantee, solve_qptas
from gspcover.exceptions import InvalidCoverError, InvalidParameterError

logger = logging.getLogger(__name__)

INNER_SOLVERS = ("exact", "qptas")

# the reduced instance has one task per threshold pair, so allow more than the plain oracle cap
DEFAULT_REDUCTION_ORACLE_CAP = 40

RANDOM_ALPHA_DENOMINATOR = 256


@dataclass(frozen=True)
class AlphaRun:
    """Outcome for one alpha."""

    alpha: Fraction
    cover_cost: Optional[Fraction]
    schedule_cost: Optional[Fraction]


@dataclass(frozen=True)
class EApproxResult:
    """Best lifted schedule over the alpha values tried.

    Attributes:
        schedule: Cheapest lifted schedule
        cost: Its cost
        alpha: Alpha that produced it
        cover_cost: Cost of the cover it was lifted from
        guarantee: Ratio bound reported for the run
        runs: One entry per alpha
    """

    schedule: Schedule
    cost: Fraction
    alpha: Fraction
    cover_cost: Fraction
    guarantee: float
    runs: Tuple[AlphaRun, ...]


def _solve_inner(
    reduced: UfpCoverInstance, inner: str, eps: Fraction, oracle_cap: int
) -> Optional[CoverSolution]:
    if inner == "exact":
        return exact_ufp_cover(reduced, cap=oracle_cap)
    result = solve_qptas(reduced, eps)
    return None if result is None else result.cover


def _run_alpha(
    inst: GspInstance,
    params: ReductionParams,
    inner: str,
    eps: Fraction,
    oracle_cap: int,
    compress: bool,
) -> Tuple[Optional[Schedule], AlphaRun]:
    reduced, rmap = reduce_gsp_to_ufp(inst, params, compress)
    cover = _solve_inner(reduced, inner, eps, oracle_cap)
    if cover is None:
        logger.debug("alpha=%s: reduced instance has no cover", params.alpha)
        return None, AlphaRun(params.alpha, None, None)
    schedule = lift_cover_to_schedule(cover.tasks, rmap, inst)
    cost = schedule_cost(inst, schedule)
    paid = cover_cost(cover.tasks)
    if cost > paid:
        raise InvalidCoverError(
            f"Lifted schedule costs {cost}, more than its cover {paid} (alpha={params.alpha})"
        )
    return schedule, AlphaRun(params.alpha, paid, cost)


def _check(inst: GspInstance, inner: str) -> None:
    if inner not in INNER_SOLVERS:
        raise InvalidParameterError(f"Unknown inner solver: {inner} (choose from {INNER_SOLVERS})")
    if any(job.r != 0 for job in inst.jobs):
        raise InvalidParameterError("The reduction needs every release date to be 0")


def solve_e_approx(
    inst: GspInstance,
    eps: Number,
    inner: str = "exact",
    grid_size: Optional[int] = None,
    gamma: Number = DEFAULT_GAMMA,
    oracle_cap: int = DEFAULT_REDUCTION_ORACLE_CAP,
    compress: bool = True,
) -> Optional[EApproxResult]:
    """Derandomized geometric rounding over alpha in {g / G : g = 0..G-1}.

    Each alpha is reduced, solved with the inner UFP-cover solver and lifted
    by EDD; the cheapest lifted schedule wins, ties to the smaller alpha.

    Args:
        inst: Instance with every release date 0
        eps: Accuracy parameter; G defaults to ceil(1/eps)
        inner: "exact" (branch and bound oracle) or "qptas"
        grid_size: Number of alpha values G
        gamma: Rounding base
        oracle_cap: Task cap for the exact inner solver
        compress: Compress the reduced path

    Returns:
        EApproxResult or None when no alpha yields a cover

    Raises:
        InvalidParameterError: On a bad solver name, eps or release dates
        InvalidCoverError: If a lifted schedule costs more than its cover
    """
    eps = to_fraction(eps)
    if eps <= 0:
        raise InvalidParameterError(f"eps must be positive, got {eps}")
    _check(inst, inner)
    size = grid_size if grid_size is not None else ceil(1 / eps)
    base = ReductionParams(to_fraction(gamma), Fraction(0), size)
    guarantee = grid_guarantee(base.gamma, size)
    if inner == "qptas":
        guarantee *= float(qptas_guarantee(min(eps, Fraction(1))))

    if inst.n == 0:
        empty = Schedule(())
        return EApproxResult(empty, Fraction(0), Fraction(0), Fraction(0), guarantee, ())

    best: Optional[Tuple[Schedule, AlphaRun]] = None
    runs = []
    for g in range(size):
        schedule, run = _run_alpha(
            inst, base.with_alpha(Fraction(g, size)), inner, min(eps, Fraction(1)), oracle_cap,
            compress,
        )
        runs.append(run)
        if schedule is None:
            continue
        if best is None or run.schedule_cost < best[1].schedule_cost:
            best = (schedule, run)

    if best is None:
        return None
    schedule, run = best
    logger.debug("best alpha %s: schedule cost %s", run.alpha, run.schedule_cost)
    return EApproxResult(schedule, run.schedule_cost, run.alpha, run.cover_cost, guarantee, tuple(runs))


def solve_random_alpha(
    inst: GspInstance,
    seed: int,
    eps: Number = Fraction(1, 2),
    inner: str = "exact",
    gamma: Number = DEFAULT_GAMMA,
    oracle_cap: int = DEFAULT_REDUCTION_ORACLE_CAP,
) -> Optional[EApproxResult]:
    """One run with alpha drawn uniformly from {k / 256 : k = 0..255}.

    Averaging over seeds estimates the expected blow-up gamma / ln(gamma).
    """
    eps = to_fraction(eps)
    _check(inst, inner)
    rng = np.random.default_rng(seed)
    alpha = Fraction(int(rng.integers(0, RANDOM_ALPHA_DENOMINATOR)), RANDOM_ALPHA_DENOMINATOR)
    params = ReductionParams(to_fraction(gamma), alpha, 1)
    guarantee = grid_guarantee(params.gamma, 1)
    if inst.n == 0:
        return EApproxResult(Schedule(()), Fraction(0), alpha, Fraction(0), guarantee, ())
    schedule, run = _run_alpha(inst, params, inner, min(eps, Fraction(1)), oracle_cap, True)
    if schedule is None:
        return None
    return EApproxResult(schedule, run.schedule_cost, alpha, run.cover_cost, guarantee, (run,))
