"""Unit tests for threshold times and the GSP to UFP-cover reduction."""

import math
from fractions import Fraction

import pytest

from gspcover.core.model.instances import GspInstance, Job, UfpTask
from gspcover.core.model.profile import cover_cost, is_feasible_cover
from gspcover.core.model.schedule import Schedule, schedule_cost
from gspcover.core.model.step import StepCostFunction
from gspcover.core.reduction.lift import cover_due_dates, lift_cover_to_schedule, schedule_to_cover
from gspcover.core.reduction.params import (
    DEFAULT_GAMMA,
    ReductionParams,
    expected_blowup,
    grid_guarantee,
)
from gspcover.core.reduction.reduce import reduce_gsp_to_ufp
from gspcover.core.reduction.thresholds import threshold_times
from gspcover.exceptions import InvalidCoverError, InvalidParameterError


class TestParams:
    """Tests for ReductionParams and its bounds."""

    def test_defaults(self):
        """gamma is e, alpha 0, G = 8."""
        params = ReductionParams()
        assert float(params.gamma) == pytest.approx(math.e)
        assert params.alpha == 0
        assert params.with_alpha(Fraction(3, 8)).alpha == Fraction(3, 8)

    @pytest.mark.parametrize("kwargs", [{"gamma": 1}, {"alpha": 1}, {"alpha": -1}, {"grid_size": 0}])
    def test_rejects(self, kwargs):
        """gamma > 1, alpha in [0, 1) and G >= 1."""
        with pytest.raises(InvalidParameterError):
            ReductionParams(**kwargs)

    def test_bounds(self):
        """e / ln e = e, and the G = 8 grid bound is near 2.892."""
        assert expected_blowup(DEFAULT_GAMMA) == pytest.approx(math.e)
        assert grid_guarantee(DEFAULT_GAMMA, 8) == pytest.approx(2.892, abs=1e-3)
        assert grid_guarantee(DEFAULT_GAMMA, 64) < grid_guarantee(DEFAULT_GAMMA, 8)


class TestThresholdTimes:
    """Tests for threshold_times."""

    def test_linear_cost(self):
        """f(t) = t, P = 8, gamma = e, alpha = 0 gives (0, 2, 3, 8, 9)."""
        job = Job(1, 1, f=StepCostFunction.linear(1, 8))
        assert threshold_times(job, DEFAULT_GAMMA, 0, 8) == (0, 2, 3, 8, 9)

    def test_zero_cost(self):
        """A free job only has the outer thresholds."""
        assert threshold_times(Job(1, 2), DEFAULT_GAMMA, 0, 5) == (0, 6)

    def test_first_paid_time_kept(self):
        """The first time with positive cost is its own threshold."""
        job = Job(1, 1, f=StepCostFunction(((3, 1),)))
        assert 3 in threshold_times(job, DEFAULT_GAMMA, 0, 5)

    def test_unavailable_counts_as_exceeding(self):
        """Past the availability bound every level is crossed."""
        job = Job(1, 1, f=StepCostFunction(((1, 1),), unavailable_after=3))
        assert 4 in threshold_times(job, DEFAULT_GAMMA, 0, 6)

    def test_alpha_moves_levels(self):
        """alpha = 1/2 raises the first level to sqrt(e)."""
        job = Job(1, 1, f=StepCostFunction.linear(1, 8))
        assert threshold_times(job, DEFAULT_GAMMA, Fraction(1, 2), 8) == (0, 2, 5, 9)

    def test_short_horizon(self):
        """P must cover the job."""
        with pytest.raises(InvalidParameterError):
            threshold_times(Job(1, 3), DEFAULT_GAMMA, 0, 2)


class TestReduce:
    """Tests for reduce_gsp_to_ufp on G1."""

    def test_uncompressed(self, g1):
        """P = 5 edges with demands 5..1 and three tasks per job."""
        reduced, rmap = reduce_gsp_to_ufp(g1, ReductionParams(), compress=False)
        assert reduced.demands == (5, 4, 3, 2, 1)
        assert rmap.horizon == 5
        assert [task.id for task in reduced.tasks] == ["j1-1", "j1-2", "j1-3", "j2-1", "j2-2", "j2-3"]
        assert reduced.task("j1-3") == UfpTask("j1-3", 2, 5, 2, 5)
        assert reduced.task("j2-2") == UfpTask("j2-2", 2, 3, 3, 6)
        assert rmap.entry("j2-3").first_step == 4

    def test_compressed_keeps_structure(self, g1):
        """Compression keeps every endpoint, so nothing merges on G1."""
        reduced, rmap = reduce_gsp_to_ufp(g1, ReductionParams())
        assert rmap.vertices == (0, 1, 2, 3, 5)
        assert reduced.demands == (5, 4, 3, 2)
        assert len(reduced.tasks) == 6

    def test_optimal_schedule_gives_feasible_cover(self, g1):
        """The cover read off order (2, 1) is feasible and costs 18."""
        reduced, rmap = reduce_gsp_to_ufp(g1, ReductionParams(), compress=False)
        cover = schedule_to_cover(Schedule.from_order(g1, [2, 1]), rmap)
        assert [task.id for task in cover] == ["j1-1", "j1-2", "j1-3", "j2-1", "j2-2"]
        assert is_feasible_cover(reduced, cover)
        assert cover_cost(cover) == 18

    def test_lift(self, g1):
        """Due dates (5, 3) lift to order (2, 1) costing 11."""
        reduced, rmap = reduce_gsp_to_ufp(g1, ReductionParams(), compress=False)
        cover = schedule_to_cover(Schedule.from_order(g1, [2, 1]), rmap)
        assert cover_due_dates(cover, rmap) == {1: 5, 2: 3}
        schedule = lift_cover_to_schedule(cover, rmap, g1)
        assert schedule.order == (2, 1)
        assert schedule_cost(g1, schedule) == 11 <= cover_cost(cover)

    def test_lift_missing_job(self, g1):
        """Every job needs a chosen task."""
        reduced, rmap = reduce_gsp_to_ufp(g1, ReductionParams())
        with pytest.raises(InvalidCoverError):
            cover_due_dates([reduced.task("j1-1")], rmap)

    def test_foreign_task(self, g1):
        """Tasks outside the reduction are refused."""
        _, rmap = reduce_gsp_to_ufp(g1, ReductionParams())
        with pytest.raises(InvalidCoverError):
            cover_due_dates([UfpTask("x", 0, 1, 1, 1)], rmap)

    def test_release_dates_rejected(self):
        """Only r = 0 reduces."""
        inst = GspInstance((Job(1, 1, 1),))
        with pytest.raises(InvalidParameterError):
            reduce_gsp_to_ufp(inst, ReductionParams())

    def test_empty_rejected(self):
        """An empty instance has nothing to reduce."""
        with pytest.raises(InvalidParameterError):
            reduce_gsp_to_ufp(GspInstance(), ReductionParams())
