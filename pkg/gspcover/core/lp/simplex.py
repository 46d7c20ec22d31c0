"""Two-phase dense tableau simplex over exact rationals.

Bland's rule picks the entering column (lowest index with negative reduced
cost) and the leaving row (lowest basic index among ratio ties), so the
method terminates on degenerate programs. Variables are shifted to a zero
lower bound, finite upper bounds become explicit rows and fixed variables
(lo == hi) are substituted out, so every optimum returned is a vertex.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from gspcover.core.lp.program import BasicSolution, LinearProgram, LPStatus, Relation
from gspcover.exceptions import LPError

logger = logging.getLogger(__name__)

Row = List[Fraction]


class _Tableau:
    """Dense tableau rows plus the reduced-cost row; rhs is the last column."""

    def __init__(self, rows: List[Row], basis: List[int], columns: int):
        self.rows = rows
        self.basis = basis
        self.columns = columns
        self.reduced: Row = [Fraction(0)] * (columns + 1)

    def price(self, cost: List[Fraction]) -> None:
        """Reset the reduced-cost row for a new objective."""
        reduced = list(cost) + [Fraction(0)]
        for row, basic in zip(self.rows, self.basis):
            weight = cost[basic]
            if weight == 0:
                continue
            for k, value in enumerate(row):
                if value != 0:
                    reduced[k] -= weight * value
        self.reduced = reduced

    def pivot(self, r: int, j: int) -> None:
        pivot_row = self.rows[r]
        pivot_value = pivot_row[j]
        pivot_row = [value / pivot_value for value in pivot_row]
        self.rows[r] = pivot_row
        nonzero = [k for k, value in enumerate(pivot_row) if value != 0]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            factor = row[j]
            if factor == 0:
                continue
            for k in nonzero:
                row[k] -= factor * pivot_row[k]
        factor = self.reduced[j]
        if factor != 0:
            for k in nonzero:
                self.reduced[k] -= factor * pivot_row[k]
        self.basis[r] = j

    def run(self, allowed: List[bool]) -> LPStatus:
        """Iterate to optimality over the allowed columns."""
        iterations = 0
        while True:
            entering = -1
            in_basis = set(self.basis)
            for j in range(self.columns):
                if allowed[j] and j not in in_basis and self.reduced[j] < 0:
                    entering = j
                    break
            if entering < 0:
                logger.debug("simplex optimal after %d pivots", iterations)
                return LPStatus.OPTIMAL

            leaving = -1
            best: Optional[Fraction] = None
            for i, row in enumerate(self.rows):
                coefficient = row[entering]
                if coefficient <= 0:
                    continue
                ratio = row[-1] / coefficient
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and self.basis[i] < self.basis[leaving])
                ):
                    best = ratio
                    leaving = i
            if leaving < 0:
                return LPStatus.UNBOUNDED
            self.pivot(leaving, entering)
            iterations += 1

    def objective(self) -> Fraction:
        return -self.reduced[-1]


def _violates(activity: Fraction, relation: Relation, rhs: Fraction) -> bool:
    if relation is Relation.LE:
        return activity > rhs
    if relation is Relation.GE:
        return activity < rhs
    return activity != rhs


def solve_to_basic_optimum(lp: LinearProgram) -> BasicSolution:
    """Solve a program exactly and return an optimal vertex.

    Args:
        lp: Program to minimise

    Returns:
        BasicSolution: status optimal, infeasible or unbounded; for optimal
        solutions the values satisfy every row exactly and at most
        ``lp.row_count`` coordinates lie strictly between their bounds

    Raises:
        LPError: If an optimum breaks feasibility or the vertex property

    Example:
        >>> lp = LinearProgram.from_dense([1, 1], [([1, 2], ">=", 4), ([2, 1], ">=", 4)])
        >>> sol = solve_to_basic_optimum(lp)
        >>> sol.values, sol.objective
        ((Fraction(4, 3), Fraction(4, 3)), Fraction(8, 3))
    """
    n = lp.variable_count
    lower = tuple(lp.lower)
    upper = tuple(lp.upper)

    def infeasible() -> BasicSolution:
        return BasicSolution(LPStatus.INFEASIBLE, lower=lower, upper=upper, row_count=lp.row_count)

    fixed: Dict[int, Fraction] = {}
    column_of: Dict[int, int] = {}
    for i in range(n):
        if upper[i] is not None and upper[i] == lower[i]:
            fixed[i] = lower[i]
        else:
            column_of[i] = len(column_of)
    structural = len(column_of)

    rows: List[Tuple[Dict[int, Fraction], Relation, Fraction]] = []
    for constraint in lp.constraints:
        coefficients: Dict[int, Fraction] = {}
        rhs = constraint.rhs
        for i, value in constraint.coefficients:
            if i in fixed:
                rhs -= value * fixed[i]
            else:
                rhs -= value * lower[i]
                coefficients[column_of[i]] = value
        if not coefficients:
            if _violates(Fraction(0), constraint.relation, rhs):
                return infeasible()
            continue
        rows.append((coefficients, constraint.relation, rhs))
    for i, column in column_of.items():
        if upper[i] is not None:
            rows.append(({column: Fraction(1)}, Relation.LE, upper[i] - lower[i]))

    normalized = []
    for coefficients, relation, rhs in rows:
        if rhs < 0:
            coefficients = {k: -v for k, v in coefficients.items()}
            rhs = -rhs
            if relation is Relation.LE:
                relation = Relation.GE
            elif relation is Relation.GE:
                relation = Relation.LE
        normalized.append((coefficients, relation, rhs))

    slack_count = sum(1 for _, relation, _ in normalized if relation is not Relation.EQ)
    artificial_count = sum(1 for _, relation, _ in normalized if relation is not Relation.LE)
    columns = structural + slack_count + artificial_count
    first_artificial = structural + slack_count

    tableau_rows: List[Row] = []
    basis: List[int] = []
    next_slack = structural
    next_artificial = first_artificial
    for coefficients, relation, rhs in normalized:
        row = [Fraction(0)] * (columns + 1)
        for k, value in coefficients.items():
            row[k] = value
        row[-1] = rhs
        if relation is Relation.LE:
            row[next_slack] = Fraction(1)
            basis.append(next_slack)
            next_slack += 1
        else:
            if relation is Relation.GE:
                row[next_slack] = Fraction(-1)
                next_slack += 1
            row[next_artificial] = Fraction(1)
            basis.append(next_artificial)
            next_artificial += 1
        tableau_rows.append(row)

    tableau = _Tableau(tableau_rows, basis, columns)

    if artificial_count:
        phase_one = [Fraction(0)] * first_artificial + [Fraction(1)] * artificial_count
        tableau.price(phase_one)
        tableau.run([True] * columns)
        if tableau.objective() > 0:
            return infeasible()
        _drive_out_artificials(tableau, first_artificial)

    cost = [Fraction(0)] * columns
    for i, column in column_of.items():
        cost[column] = lp.objective[i]
    tableau.price(cost)
    status = tableau.run([k < first_artificial for k in range(columns)])
    if status is LPStatus.UNBOUNDED:
        return BasicSolution(LPStatus.UNBOUNDED, lower=lower, upper=upper, row_count=lp.row_count)

    shifted = [Fraction(0)] * structural
    for row, basic in zip(tableau.rows, tableau.basis):
        if basic < structural:
            shifted[basic] = row[-1]
    values = []
    for i in range(n):
        if i in fixed:
            values.append(fixed[i])
        else:
            values.append(lower[i] + shifted[column_of[i]])

    if not lp.is_feasible_point(values):
        raise LPError("Simplex returned a point violating the program")

    interior = []
    fractional = []
    for i, value in enumerate(values):
        inside = value > lower[i] and (upper[i] is None or value < upper[i])
        if inside:
            interior.append(i)
            if value.denominator != 1:
                fractional.append(i)
    if len(interior) > lp.row_count:
        raise LPError(
            f"Optimum is not a vertex: {len(interior)} interior coordinates, "
            f"{lp.row_count} rows"
        )

    return BasicSolution(
        status=LPStatus.OPTIMAL,
        values=tuple(values),
        objective=lp.objective_value(values),
        fractional_indices=tuple(fractional),
        lower=lower,
        upper=upper,
        row_count=lp.row_count,
    )


def _drive_out_artificials(tableau: _Tableau, first_artificial: int) -> None:
    """Pivot zero-valued artificials out of the basis, dropping redundant rows."""
    r = 0
    while r < len(tableau.rows):
        if tableau.basis[r] < first_artificial:
            r += 1
            continue
        row = tableau.rows[r]
        replacement = next(
            (j for j in range(first_artificial) if row[j] != 0 and j not in tableau.basis),
            None,
        )
        if replacement is None:
            del tableau.rows[r]
            del tableau.basis[r]
            continue
        tableau.pivot(r, replacement)
        r += 1
