"""Unit tests for instance types."""

from fractions import Fraction

import pytest

from gspcover.core.model.instances import GspInstance, Job, UfpCoverInstance, UfpTask, class_job
from gspcover.core.model.step import StepCostFunction
from gspcover.exceptions import InvalidInstanceError


class TestUfpTask:
    """Tests for UfpTask validation."""

    def test_edges(self):
        """Task [1, 3] covers edges 1 and 2."""
        task = UfpTask("x", 1, 3, 2, 1)
        assert list(task.edges) == [1, 2]
        assert task.covers(2) and not task.covers(3)

    def test_empty_path_rejected(self):
        """s must be below t."""
        with pytest.raises(InvalidInstanceError):
            UfpTask("x", 2, 2, 1, 1)

    def test_size_must_be_positive(self):
        """Sizes are positive integers."""
        with pytest.raises(InvalidInstanceError):
            UfpTask("x", 0, 1, 0, 1)

    def test_cost_converted(self):
        """Float costs become exact fractions."""
        assert UfpTask("x", 0, 1, 1, 0.5).c == Fraction(1, 2)


class TestUfpCoverInstance:
    """Tests for UfpCoverInstance validation."""

    def test_u1_shape(self, u1):
        """U1 has 3 edges and 4 tasks."""
        assert u1.m == 3 and u1.n == 4
        assert u1.task("d").p == 3

    def test_demand_count_must_match(self):
        """One demand per edge."""
        with pytest.raises(InvalidInstanceError):
            UfpCoverInstance(3, (1, 1))

    def test_task_beyond_path(self):
        """Tasks must end within the path."""
        with pytest.raises(InvalidInstanceError):
            UfpCoverInstance(2, (1, 1), (UfpTask("x", 0, 3, 1, 1),))

    def test_duplicate_ids(self):
        """Task ids are unique."""
        task = UfpTask("x", 0, 1, 1, 1)
        with pytest.raises(InvalidInstanceError):
            UfpCoverInstance(1, (1,), (task, task))


class TestJobs:
    """Tests for jobs and class form."""

    def test_cost(self, g1):
        """f_2(t) = 2t."""
        assert g1.job(2).cost(3) == 6

    def test_release_must_be_integral(self):
        """Release dates are nonnegative integers."""
        with pytest.raises(InvalidInstanceError):
            Job(1, 2, -1)

    def test_class_job(self):
        """class_job scales the global function."""
        g = StepCostFunction.linear(1, 10)
        assert class_job(1, 2, 0, 0, 3, [g]).cost(4) == 12

    def test_class_form_mismatch(self):
        """f must equal w * g_u."""
        g = StepCostFunction.linear(1, 10)
        job = Job(1, 2, 0, StepCostFunction.linear(2, 10), u=0, w=3)
        with pytest.raises(InvalidInstanceError):
            GspInstance((job,), (g,), 3)

    def test_weight_bound(self):
        """Weights may not exceed W."""
        g = StepCostFunction.linear(1, 10)
        with pytest.raises(InvalidInstanceError):
            GspInstance((class_job(1, 2, 0, 0, 3, [g]),), (g,), 2)


class TestGspInstance:
    """Tests for GspInstance properties."""

    def test_g1_properties(self, g1):
        """Uniform release, P = 5, horizon 5."""
        assert g1.n == 2
        assert g1.total_processing == 5
        assert g1.is_uniform_release
        assert g1.horizon == 5
        assert not g1.has_class_form

    def test_class_form(self, g1_classes):
        """Class-form G1 reports k = 1."""
        assert g1_classes.has_class_form
        assert g1_classes.class_count == 1

    def test_release_dates(self):
        """Distinct release dates in order."""
        inst = GspInstance((Job(1, 1, 3), Job(2, 1, 0), Job(3, 1, 3)))
        assert inst.release_dates == (0, 3)
        assert not inst.is_uniform_release
        assert inst.horizon == 6

    def test_empty(self):
        """Empty instance has horizon 0."""
        assert GspInstance().horizon == 0
