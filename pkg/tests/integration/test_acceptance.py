"""Seeded acceptance runs of every solver against the exact oracles.

Each check runs twice: a reduced seed count in the default test run, and
the full-size run under the ``slow`` marker. Skip the latter with
``pytest -m "not slow"``.
"""

from fractions import Fraction
from itertools import permutations, product

import numpy as np
import pytest

from gspcover.core.fewclass import fewclass_guarantee, solve_few_classes
from gspcover.core.model.edd import edd_feasible, edd_simulate
from gspcover.core.model.instances import UfpCoverInstance, UfpTask
from gspcover.core.model.profile import cover_cost, induced_heights, is_feasible_cover
from gspcover.core.model.schedule import schedule_cost
from gspcover.core.oracles import exact_due_dates, exact_gsp_uniform_release, exact_ufp_cover
from gspcover.core.reduction import (
    ReductionParams,
    grid_guarantee,
    lift_cover_to_schedule,
    reduce_gsp_to_ufp,
    solve_e_approx,
)
from gspcover.core.speedup import solve_speedup, validate_speed_schedule
from gspcover.core.ufp import (
    build_group_candidates,
    cover_profile_lp,
    enumerate_approx_profiles,
    group_guarantee,
    group_tasks,
    qptas_guarantee,
    solve_qptas,
)
from gspcover.core.workbench.generators import generate_gsp, generate_ufp

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
# seven jobs can reduce to more tasks than the solver's default oracle cap
FULL_REDUCTION_ORACLE_CAP = 64


def _single_group_instance(seed, n=8, m=4):
    """Unit-size tasks with costs in [1, 3/2), all crossing edge m // 2."""
    rng = np.random.default_rng(seed)
    middle = m // 2
    costs = [Fraction(1), Fraction(5, 4), Fraction(4, 3), Fraction(7, 5)]
    tasks = []
    for i in range(n):
        s = int(rng.integers(0, middle + 1))
        t = int(rng.integers(middle + 1, m + 1))
        tasks.append(UfpTask(f"t{i:02d}", s, t, 1, costs[int(rng.integers(0, len(costs)))]))
    planted = [task for task in tasks if rng.random() < 0.6] or tasks[:1]
    heights = induced_heights(planted, 0, m)
    return UfpCoverInstance(m, tuple(int(h) for h in heights), tuple(tasks))


def _preemptive_optimum(inst):
    """Cheapest preemptive schedule, found over all fixed priority orders."""
    best = None
    for order in permutations(job.id for job in inst.jobs):
        rank = {job_id: position for position, job_id in enumerate(order)}
        trace = edd_simulate(inst.jobs, rank)
        cost = sum(job.cost(trace.completion_of(job.id)) for job in inst.jobs)
        best = cost if best is None else min(best, cost)
    return best


def _check_qptas(seeds, eps, sizes):
    guarantee = qptas_guarantee(eps)
    ratios = []
    for seed in seeds:
        n, m = sizes(seed)
        inst = generate_ufp(seed, n, m)
        result = solve_qptas(inst, eps)
        optimum = exact_ufp_cover(inst).cost
        assert is_feasible_cover(inst, result.tasks), seed
        if optimum:
            ratios.append(result.cost / optimum)
            assert result.cost <= guarantee * optimum, seed
    assert ratios
    print(f"\n  qptas eps={eps} mean ratio {float(np.mean(ratios)):.4f} over {len(ratios)} runs")


def _check_group_candidates(seeds, n):
    factor = group_guarantee(HALF)
    for seed in seeds:
        inst = _single_group_instance(seed, n=n)
        groups = group_tasks(inst.tasks, HALF)
        assert len(groups) == 1
        optimum = exact_ufp_cover(inst)
        target = induced_heights(optimum.tasks, 0, inst.m)
        candidates = build_group_candidates(groups[0], HALF, 0, inst.m, inst.m // 2)
        assert any(
            all(h >= o for h, o in zip(induced_heights(c.tasks, 0, inst.m), target))
            and cover_cost(c.tasks) <= factor * optimum.cost
            for c in candidates
        ), seed


def _check_reduction(seeds, sizes, oracle_cap):
    bound = grid_guarantee(grid_size=8)
    for seed in seeds:
        inst = generate_gsp(seed, sizes(seed))
        optimum = exact_gsp_uniform_release(inst).cost
        result = solve_e_approx(inst, HALF, grid_size=8, oracle_cap=oracle_cap)
        assert optimum <= result.cost <= bound * float(optimum) + 1e-9, seed
        assert len(result.runs) == 8
        for run in result.runs:
            if run.schedule_cost is not None:
                assert run.schedule_cost <= run.cover_cost, (seed, run.alpha)


def _check_speedup(seeds, sizes):
    for seed in seeds:
        inst = generate_gsp(seed, sizes(seed))
        result = solve_speedup(inst, HALF)
        assert result.cost <= exact_gsp_uniform_release(inst).cost, seed
        assert validate_speed_schedule(inst, result.schedule, result.speed), seed


def _check_few_classes(seeds, sizes, oracle):
    bound = fewclass_guarantee(HALF)
    for seed in seeds:
        inst = generate_gsp(seed, sizes(seed), k=3, releases=(0, 3), size_range=(1, 2))
        optimum = oracle(inst)
        result = solve_few_classes(inst, HALF)
        assert edd_feasible(inst.jobs, result.assignment), seed
        assert result.true_cost <= bound * optimum, seed


def _check_feasibility_equivalence(seeds, sizes):
    for seed in seeds:
        inst = generate_gsp(seed, sizes(seed), releases=(0, 1, 2), size_range=(1, 2))
        ids = [job.id for job in inst.jobs]
        for dates in product(range(1, 8), repeat=len(ids)):
            due = dict(zip(ids, dates))
            assert edd_feasible(inst.jobs, due) == edd_feasible(inst.jobs, due, method="intervals")


class TestQptasAcceptance:
    """QPTAS output is feasible and within its symbolic guarantee."""

    def test_ratio_within_guarantee(self):
        """Feasible on every seed; ratio below (1+eps) * group factor * (1+eps)."""
        _check_qptas(range(20), HALF, lambda seed: (8, 5))

    @pytest.mark.slow
    @pytest.mark.parametrize("eps", [QUARTER, HALF])
    def test_full_size(self, eps):
        """200 seeds with up to 12 tasks on up to 8 edges."""
        _check_qptas(range(200), eps, lambda seed: (4 + seed % 9, 3 + seed % 6))


class TestGroupCandidates:
    """A candidate dominates the group optimum at bounded cost."""

    def test_dominating_candidate(self):
        """Some candidate has heights >= the optimum's and cost <= factor * optimum."""
        _check_group_candidates(range(25), 8)

    @pytest.mark.slow
    def test_full_size(self):
        """100 seeds with 10 tasks through the middle edge."""
        _check_group_candidates(range(100), 10)


class TestReductionAcceptance:
    """The rounded reduction stays within its grid bound."""

    def test_min_over_alpha(self):
        """Best lifted cost <= grid bound * optimum; each alpha lifts below its cover."""
        _check_reduction(range(10, 20), lambda seed: 4, oracle_cap=40)

    def test_lift_of_exact_cover(self):
        """Lifting the exact cover of one reduced instance never costs more."""
        params = ReductionParams(grid_size=8).with_alpha(Fraction(3, 8))
        for seed in range(5):
            inst = generate_gsp(seed, 3)
            ufp, rmap = reduce_gsp_to_ufp(inst, params)
            cover = exact_ufp_cover(ufp, cap=ufp.n)
            schedule = lift_cover_to_schedule(cover.tasks, rmap, inst)
            assert schedule_cost(inst, schedule) <= cover.cost

    @pytest.mark.slow
    def test_full_size(self):
        """100 seeds with up to 7 jobs."""
        _check_reduction(range(100), lambda seed: 3 + seed % 5, FULL_REDUCTION_ORACLE_CAP)


class TestSpeedupAcceptance:
    """The speed-augmented solver beats the unit-speed optimum."""

    def test_cost_and_validity(self):
        """Cost <= optimum and the schedule validates at its speed."""
        _check_speedup(range(10), lambda seed: 5)

    @pytest.mark.slow
    def test_full_size(self):
        """100 seeds with up to 7 jobs."""
        _check_speedup(range(100), lambda seed: 3 + seed % 5)


class TestFewClassAcceptance:
    """The class solver stays within its bound of the preemptive optimum."""

    def test_release_dates(self):
        """Up to two release dates and three classes, against the due date oracle."""
        _check_few_classes(
            range(10), lambda seed: 4,
            lambda inst: exact_due_dates(inst, range(1, inst.horizon + 1)).cost,
        )

    @pytest.mark.slow
    def test_full_size(self):
        """100 seeds with up to 8 jobs, against every priority order."""
        _check_few_classes(range(100), lambda seed: 4 + seed % 5, _preemptive_optimum)


class TestFeasibilityEquivalence:
    """EDD simulation and the interval condition always agree."""

    def test_exhaustive_grid(self):
        """Every due date assignment on a small grid."""
        _check_feasibility_equivalence(range(15), lambda seed: 3)

    @pytest.mark.slow
    def test_full_size(self):
        """50 instances with up to 5 jobs."""
        _check_feasibility_equivalence(range(50), lambda seed: 3 + seed % 3)


class TestDueDateOracle:
    """The due date oracle reaches the preemptive optimum."""

    @pytest.mark.slow
    def test_all_completion_times(self):
        """With D = every integral time up to the horizon, release dates included."""
        for seed in range(20):
            inst = generate_gsp(seed, 4, releases=(0, 2, 5), size_range=(1, 3))
            optimum = exact_due_dates(inst, range(1, inst.horizon + 1)).cost
            assert optimum == _preemptive_optimum(inst), seed


class TestExtremePoints:
    """LP vertices found by the solvers are sparse."""

    def test_profile_lps(self):
        """Profile LPs leave at most 2(1/eps + 1) fractional tasks and no more than their rows."""
        limit = 2 * (1 / HALF + 1)
        for seed in range(10):
            inst = _single_group_instance(seed, n=10)
            group = group_tasks(inst.tasks, HALF)[0]
            for profile in enumerate_approx_profiles(group, 5, HALF, 0, inst.m, inst.m // 2):
                cover = cover_profile_lp(group.tasks, profile)
                if cover is not None:
                    assert cover.fractional_count <= limit
                    assert cover.fractional_count <= cover.row_count
