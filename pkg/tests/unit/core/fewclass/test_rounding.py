"""Unit tests for class function rounding and the due date LP."""

from fractions import Fraction
from itertools import permutations

import pytest

from gspcover.core.fewclass.lp import (
    ExpensiveGuess,
    admissible_cost,
    build_due_date_lp,
    check_rounding_bound,
    round_due_date_lp,
)
from gspcover.core.fewclass.rounding import (
    due_date_candidates,
    floor_value,
    round_class_functions,
    round_value,
    solver_due_dates,
)
from gspcover.core.lp import solve_to_basic_optimum
from gspcover.core.model.edd import edd_feasible
from gspcover.core.model.schedule import Schedule, completion_times, schedule_cost
from gspcover.core.model.step import StepCostFunction
from gspcover.core.workbench.generators import generate_gsp
from gspcover.exceptions import InvalidParameterError, RoundingError


@pytest.fixture
def rounded(g1_classes, half):
    """G1 class functions rounded against B = 12."""
    return round_class_functions(g1_classes.global_functions, 12, 2, 2, half)


class TestRoundValue:
    """Tests for round_value with B = 100, W = 8, n = 10, eps = 1/2."""

    def test_floor(self, half):
        """Values up to eps B / (n W) = 5/8 become 5/8."""
        assert floor_value(100, 8, 10, half) == Fraction(5, 8)
        assert round_value(Fraction(3, 10), 100, 8, 10, half) == Fraction(5, 8)

    def test_power(self, half):
        """7 rounds up to (3/2)^5."""
        assert round_value(7, 100, 8, 10, half) == Fraction(243, 32)

    def test_capped_at_budget(self, half):
        """Values above B become B."""
        assert round_value(200, 100, 8, 10, half) == 100

    def test_zero_stays(self, half):
        """Zero is never rounded up."""
        assert round_value(0, 100, 8, 10, half) == 0


class TestRoundClassFunctions:
    """Tests for round_class_functions on G1's class function g(t) = t."""

    def test_values(self, rounded):
        """Floor 3/2, then powers of 3/2, then B."""
        g = rounded.functions[0]
        assert rounded.floor == Fraction(3, 2)
        assert g.value_at(1) == Fraction(3, 2)
        assert g.value_at(2) == Fraction(9, 4)
        assert g.value_at(5) == Fraction(81, 16)
        assert g.value_at(12) == 12

    def test_within_one_plus_eps(self, rounded, half):
        """Above the floor and below B the rounding loses at most 1 + eps."""
        g, original = rounded.functions[0], rounded.originals[0]
        for t in range(2, 12):
            assert original.value_at(t) <= g.value_at(t) <= (1 + half) * original.value_at(t)

    def test_candidates(self, rounded):
        """Increase points of the rounded function."""
        assert due_date_candidates(rounded) == (1, 2, 3, 4, 6, 8, 12)
        assert len(due_date_candidates(rounded)) <= rounded.k * rounded.distinct_value_bound()

    def test_solver_due_dates(self, rounded, g1_classes):
        """Integral dates between the earliest completion and the horizon."""
        assert solver_due_dates(rounded, g1_classes.jobs, g1_classes.horizon) == (2, 3, 5)

    def test_job_cost_uses_weight(self, rounded, g1_classes):
        """Job 2 has weight 2."""
        assert rounded.job_cost(g1_classes.job(2), 3) == 2 * Fraction(27, 8)

    @pytest.mark.parametrize("args", [(0, 2, 2, Fraction(1, 2)), (12, 0, 2, Fraction(1, 2)), (12, 2, 2, 0)])
    def test_bad_arguments(self, args):
        """B, W, n and eps are positive."""
        budget, weight_bound, n, eps = args
        with pytest.raises(InvalidParameterError):
            round_class_functions([StepCostFunction.linear(1, 4)], budget, weight_bound, n, eps)


class TestExpensiveGuess:
    """Tests for ExpensiveGuess."""

    def test_extend(self):
        """Costs go down, ids up among ties."""
        guess = ExpensiveGuess().extend(2, 5, Fraction(10)).extend(1, 3, Fraction(4))
        assert guess.job_ids == (2, 1)
        assert guess.threshold == 4
        assert guess.cost == 14
        assert guess.due_dates() == {2: 5, 1: 3}
        assert guess.allows(3, Fraction(4))
        assert not guess.allows(0, Fraction(4))

    def test_rejects_increase(self):
        """A costlier job cannot follow."""
        with pytest.raises(InvalidParameterError):
            ExpensiveGuess().extend(1, 3, Fraction(1)).extend(2, 5, Fraction(2))

    def test_rejects_duplicate(self):
        """A job is guessed once."""
        with pytest.raises(InvalidParameterError):
            ExpensiveGuess().extend(1, 3, Fraction(2)).extend(1, 5, Fraction(1))


class TestDueDateLp:
    """Tests for the due date LP."""

    def test_admissible_cost(self, rounded, g1_classes):
        """A date before r + p or above the threshold is not allowed."""
        job = g1_classes.job(2)
        assert admissible_cost(job, 2, rounded) is None
        assert admissible_cost(job, 3, rounded) == Fraction(27, 4)
        assert admissible_cost(job, 5, rounded, threshold=Fraction(1)) is None

    def test_round_is_edd_feasible(self, rounded, g1_classes):
        """Latest-support rounding gives EDD-feasible dates."""
        model = build_due_date_lp(g1_classes.jobs, ExpensiveGuess(), (2, 3, 5), rounded)
        assert model.covering_rows >= 1
        solution = solve_to_basic_optimum(model.lp)
        assignment, split = round_due_date_lp(model, solution)
        assert len(assignment) == 2
        assert split <= model.covering_rows
        assert edd_feasible(g1_classes.jobs, assignment)

    def test_fully_guessed(self, rounded, g1_classes):
        """No free jobs leaves an empty LP."""
        guess = ExpensiveGuess().extend(1, 5, Fraction(81, 16)).extend(2, 3, Fraction(27, 4) - 2)
        model = build_due_date_lp(g1_classes.jobs, guess, (2, 3, 5), rounded)
        assert model.free_jobs == ()
        assert model.lp.variable_count == 0


class TestRoundingBound:
    """Tests for check_rounding_bound."""

    def test_vertex_rounding_within_bound(self, rounded, g1_classes, half):
        """The rounded free cost of an LP vertex stays within the bound."""
        model = build_due_date_lp(g1_classes.jobs, ExpensiveGuess(), (2, 3, 5), rounded)
        solution = solve_to_basic_optimum(model.lp)
        assignment, split = round_due_date_lp(model, solution)
        free_cost = sum(
            (rounded.job_cost(job, assignment[job.id]) for job in model.free_jobs), Fraction(0)
        )
        bound = check_rounding_bound(
            model, ExpensiveGuess(), solution.objective, free_cost, split, half
        )
        assert solution.objective <= free_cost <= bound

    def test_rounded_jobs_priced_at_threshold(self, rounded, half):
        """Each rounded job may add at most the cheapest guessed cost."""
        model = build_due_date_lp([], ExpensiveGuess(), (2, 3, 5), rounded)
        guess = ExpensiveGuess().extend(1, 5, Fraction(4))
        with pytest.raises(RoundingError, match="1 rounded jobs at 4"):
            check_rounding_bound(model, guess, Fraction(1), Fraction(6), 1, half)

    def test_full_guess_uses_eps_share(self, rounded, half):
        """With enough guessed jobs the slack is eps times the guessed cost."""
        model = build_due_date_lp([], ExpensiveGuess(), (2, 3, 5), rounded)
        guess = ExpensiveGuess().extend(1, 5, Fraction(4))
        assert check_rounding_bound(model, guess, Fraction(0), Fraction(2), 2, half) == 2
        with pytest.raises(RoundingError, match=r"\* 4"):
            check_rounding_bound(model, guess, Fraction(0), Fraction(3), 2, half)


class TestAggregateRounding:
    """Rounded schedule costs against the budget they were rounded for."""

    def test_every_order_within_one_plus_two_eps(self, half):
        """A schedule costing at most B costs between its cost and (1 + 2 eps) B after rounding."""
        for seed in range(8):
            inst = generate_gsp(seed, 4, k=3)
            for order in permutations(job.id for job in inst.jobs):
                schedule = Schedule.from_order(inst, order)
                cost = schedule_cost(inst, schedule)
                if cost == 0:
                    continue
                completions = completion_times(inst, schedule)
                for budget in (cost, 2 * cost):
                    rounded = round_class_functions(
                        inst.global_functions, budget, inst.weight_bound, inst.n, half
                    )
                    total = sum(rounded.job_cost(job, completions[job.id]) for job in inst.jobs)
                    assert cost <= total <= (1 + 2 * half) * budget, (seed, order, budget)
