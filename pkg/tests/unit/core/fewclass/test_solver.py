"""Unit tests for the few-class solver."""

from fractions import Fraction

import pytest

from gspcover.core.fewclass.solver import budget_grid, fewclass_guarantee, solve_few_classes
from gspcover.core.model.edd import edd_feasible
from gspcover.core.model.instances import GspInstance, class_job
from gspcover.core.model.step import StepCostFunction
from gspcover.core.oracles.gsp import exact_due_dates
from gspcover.core.workbench.generators import generate_gsp
from gspcover.exceptions import CapExceededError, InvalidParameterError


class TestGuarantee:
    """Tests for the reported bound."""

    def test_half(self, half):
        """eps = 1/2 gives 9/2."""
        assert fewclass_guarantee(half) == Fraction(9, 2)

    def test_budget_grid(self, g1_classes, half):
        """Powers of 3/2 from the largest cheapest job cost to the total of maxima."""
        grid = budget_grid(g1_classes, half)
        assert grid[0] <= 6 < grid[1]
        assert grid[-1] >= 15
        assert grid == sorted(grid)


class TestSolveFewClasses:
    """Tests for solve_few_classes."""

    def test_g1_classes(self, g1_classes, half):
        """Due dates are feasible and within 9/2 of the optimum 11."""
        result = solve_few_classes(g1_classes, half)
        assert edd_feasible(g1_classes.jobs, result.assignment)
        assert result.guarantee == Fraction(9, 2)
        assert 11 <= result.completion_cost <= result.true_cost <= Fraction(9, 2) * 11
        assert result.trace.feasible
        assert result.stats["budgets_tried"] >= 1
        assert 1 <= result.stats["rounding_checks"] <= result.stats["lp_solves"]

    def test_nonpreemptive_trace_gives_schedule(self, g1_classes, half):
        """Uniform releases never preempt, so a schedule is attached."""
        result = solve_few_classes(g1_classes, half)
        assert result.schedule is not None
        assert sorted(result.schedule.order) == [1, 2]

    def test_zero_cost_shortcut(self, half):
        """Zero functions skip the budget search."""
        g = StepCostFunction.zero()
        inst = GspInstance((class_job(1, 2, 0, 0, 1, [g]), class_job(2, 1, 0, 0, 1, [g])), (g,), 1)
        result = solve_few_classes(inst, half)
        assert result.cost == 0
        assert result.stats["budgets_tried"] == 0

    def test_empty(self, half):
        """No jobs cost 0."""
        assert solve_few_classes(GspInstance(), half).true_cost == 0

    def test_needs_class_form(self, g1, half):
        """Jobs without class and weight are refused."""
        with pytest.raises(InvalidParameterError):
            solve_few_classes(g1, half)

    def test_release_date_cap(self, half):
        """Too many distinct releases raise."""
        g = StepCostFunction.linear(1, 10)
        inst = GspInstance((class_job(1, 1, 0, 0, 1, [g]), class_job(2, 1, 1, 0, 1, [g])), (g,), 1)
        with pytest.raises(CapExceededError):
            solve_few_classes(inst, half, release_cap=1)

    @pytest.mark.parametrize("eps", [0, 2])
    def test_eps_range(self, g1_classes, eps):
        """eps must lie in (0, 1]."""
        with pytest.raises(InvalidParameterError):
            solve_few_classes(g1_classes, eps)

    def test_random_with_release_dates(self, half):
        """Costs lie between the due date optimum and 9/2 times it."""
        for seed in range(6):
            inst = generate_gsp(seed, 4, k=2, releases=(0, 2))
            optimum = exact_due_dates(inst, range(1, inst.horizon + 1)).cost
            result = solve_few_classes(inst, half)
            assert edd_feasible(inst.jobs, result.assignment)
            assert optimum <= result.true_cost <= fewclass_guarantee(half) * optimum
