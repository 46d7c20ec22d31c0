"""Unit tests for the exact UFP-cover oracle."""

import itertools
from fractions import Fraction

import pytest

from gspcover.core.model.instances import UfpCoverInstance, UfpTask
from gspcover.core.model.profile import cover_cost, is_feasible_cover
from gspcover.core.oracles.ufp import exact_ufp_cover, knapsack_cover_bound
from gspcover.core.workbench.generators import generate_ufp
from gspcover.exceptions import CapExceededError


def _brute_force(inst):
    best = None
    for size in range(inst.n + 1):
        for subset in itertools.combinations(inst.tasks, size):
            if is_feasible_cover(inst, subset):
                key = (cover_cost(subset), tuple(sorted(task.id for task in subset)))
                best = key if best is None else min(best, key)
    return best


class TestExactUfpCover:
    """Tests for exact_ufp_cover."""

    def test_u1(self, u1):
        """U1 is covered optimally by {a, b} at cost 3."""
        solution = exact_ufp_cover(u1)
        assert solution.ids == ("a", "b")
        assert solution.cost == 3

    def test_zero_demands(self, u1):
        """All-zero demands need no task."""
        solution = exact_ufp_cover(u1.with_demands((0, 0, 0)))
        assert solution.ids == ()
        assert solution.cost == 0

    def test_uncoverable_edge(self):
        """An edge no task crosses makes the instance infeasible."""
        inst = UfpCoverInstance(2, (1, 1), (UfpTask("a", 0, 1, 5, 1),))
        assert exact_ufp_cover(inst) is None

    def test_cap(self, u1):
        """More tasks than the cap raises."""
        with pytest.raises(CapExceededError):
            exact_ufp_cover(u1, cap=3)

    def test_tie_break_by_ids(self):
        """Among equal-cost covers the smallest id tuple wins."""
        inst = UfpCoverInstance(1, (1,), (UfpTask("y", 0, 1, 1, 2), UfpTask("x", 0, 1, 1, 2)))
        assert exact_ufp_cover(inst).ids == ("x",)

    def test_matches_subset_enumeration(self):
        """Branch and bound agrees with enumerating every subset."""
        for seed in range(30):
            inst = generate_ufp(seed, 7, 4)
            solution = exact_ufp_cover(inst)
            expected = _brute_force(inst)
            assert (solution.cost, solution.ids) == expected

    def test_monotone_in_tasks_and_demands(self):
        """Adding a task never raises the optimum; raising a demand never lowers it."""
        for seed in range(10):
            inst = generate_ufp(seed, 6, 4)
            base = exact_ufp_cover(inst).cost
            extra = inst.with_tasks(inst.tasks + (UfpTask("zz", 0, inst.m, 1, 1),))
            assert exact_ufp_cover(extra).cost <= base
            raised = inst.with_demands(tuple(u + 1 for u in inst.demands))
            result = exact_ufp_cover(raised)
            assert result is None or result.cost >= base


class TestKnapsackCoverBound:
    """Tests for the fractional single-edge bound."""

    def test_size_capped_at_need(self):
        """A size-2 task covering need 1 costs its full price."""
        assert knapsack_cover_bound([UfpTask("a", 0, 1, 2, 4)], Fraction(1)) == 4

    def test_fractional_last_item(self):
        """The last task is taken fractionally."""
        tasks = [UfpTask("a", 0, 1, 2, 2), UfpTask("b", 0, 1, 2, 6)]
        assert knapsack_cover_bound(tasks, Fraction(3)) == 2 + 3

    def test_unreachable(self):
        """None when the tasks are too small."""
        assert knapsack_cover_bound([UfpTask("a", 0, 1, 1, 1)], Fraction(2)) is None

    def test_no_need(self):
        """Zero residual demand costs nothing."""
        assert knapsack_cover_bound([], Fraction(0)) == 0
