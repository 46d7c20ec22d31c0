"""Linear program builder and solution types.

Programs are minimisation problems over rational data. Rows are stored
sparsely as {variable index: coefficient}; the simplex densifies them.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from gspcover.core.model.numeric import Number, to_fraction
from gspcover.exceptions import LPError


class Relation(str, Enum):
    """Constraint sense."""

    LE = "<="
    GE = ">="
    EQ = "="


class LPStatus(str, Enum):
    """Outcome of a solve."""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    """One row: sum coefficients[i] * x_i (relation) rhs."""

    coefficients: Tuple[Tuple[int, Fraction], ...]
    relation: Relation
    rhs: Fraction
    name: str = ""


@dataclass
class LinearProgram:
    """Minimise c.x subject to rows and variable bounds lo <= x <= hi.

    Example:
        >>> lp = LinearProgram()
        >>> x = lp.add_variable("x", cost=1)
        >>> y = lp.add_variable("y", cost=1)
        >>> lp.add_constraint({x: 1, y: 2}, Relation.GE, 4)
        >>> lp.add_constraint({x: 2, y: 1}, Relation.GE, 4)
    """

    objective: List[Fraction] = field(default_factory=list)
    lower: List[Fraction] = field(default_factory=list)
    upper: List[Optional[Fraction]] = field(default_factory=list)
    names: List[str] = field(default_factory=list)
    constraints: List[Constraint] = field(default_factory=list)

    @property
    def variable_count(self) -> int:
        """Number of variables."""
        return len(self.objective)

    @property
    def row_count(self) -> int:
        """Number of explicit constraint rows (bounds excluded)."""
        return len(self.constraints)

    def add_variable(
        self,
        name: str = "",
        cost: Number = 0,
        lo: Number = 0,
        hi: Optional[Number] = None,
    ) -> int:
        """Append a variable and return its index."""
        lo = to_fraction(lo)
        hi = None if hi is None else to_fraction(hi)
        if hi is not None and hi < lo:
            raise LPError(f"Variable {name or len(self.objective)}: upper bound below lower bound")
        self.objective.append(to_fraction(cost))
        self.lower.append(lo)
        self.upper.append(hi)
        self.names.append(name or f"x{len(self.objective) - 1}")
        return len(self.objective) - 1

    def add_constraint(
        self,
        coefficients: Mapping[int, Number],
        relation: Relation,
        rhs: Number,
        name: str = "",
    ) -> int:
        """Append a row and return its index.

        Raises:
            LPError: If the row references an unknown variable
        """
        row = []
        for index, value in sorted(coefficients.items()):
            if not 0 <= index < self.variable_count:
                raise LPError(f"Constraint references unknown variable {index}")
            value = to_fraction(value)
            if value != 0:
                row.append((index, value))
        self.constraints.append(Constraint(tuple(row), Relation(relation), to_fraction(rhs), name))
        return len(self.constraints) - 1

    @classmethod
    def from_dense(
        cls,
        objective: Sequence[Number],
        rows: Sequence[Tuple[Sequence[Number], str, Number]],
        bounds: Optional[Sequence[Tuple[Number, Optional[Number]]]] = None,
    ) -> "LinearProgram":
        """Build a program from dense vectors.

        Args:
            objective: Cost per variable
            rows: (coefficients, relation, rhs) triples
            bounds: (lo, hi) per variable, default (0, None)

        Raises:
            LPError: If dimensions disagree
        """
        lp = cls()
        n = len(objective)
        if bounds is not None and len(bounds) != n:
            raise LPError(f"Expected {n} bounds, got {len(bounds)}")
        for i, cost in enumerate(objective):
            lo, hi = bounds[i] if bounds is not None else (0, None)
            lp.add_variable(f"x{i}", cost, lo, hi)
        for coefficients, relation, rhs in rows:
            if len(coefficients) != n:
                raise LPError(f"Row has {len(coefficients)} coefficients, expected {n}")
            lp.add_constraint(dict(enumerate(coefficients)), Relation(relation), rhs)
        return lp

    def row_activity(self, row: Constraint, values: Sequence[Fraction]) -> Fraction:
        """Left-hand side of a row at the given point."""
        return sum((coefficient * values[i] for i, coefficient in row.coefficients), Fraction(0))

    def is_feasible_point(self, values: Sequence[Fraction]) -> bool:
        """Exact feasibility check of a point."""
        if len(values) != self.variable_count:
            return False
        for i, value in enumerate(values):
            if value < self.lower[i]:
                return False
            if self.upper[i] is not None and value > self.upper[i]:
                return False
        for row in self.constraints:
            activity = self.row_activity(row, values)
            if row.relation is Relation.LE and activity > row.rhs:
                return False
            if row.relation is Relation.GE and activity < row.rhs:
                return False
            if row.relation is Relation.EQ and activity != row.rhs:
                return False
        return True

    def objective_value(self, values: Sequence[Fraction]) -> Fraction:
        """c.x at the given point."""
        return sum((c * v for c, v in zip(self.objective, values)), Fraction(0))


@dataclass(frozen=True)
class BasicSolution:
    """Result of solving a program to a basic optimum.

    Attributes:
        status: optimal, infeasible or unbounded
        values: Vertex coordinates (empty unless optimal)
        objective: Optimal value (None unless optimal)
        fractional_indices: Coordinates strictly inside their bounds and not integral
        lower: Lower bounds of the program
        upper: Upper bounds of the program
        row_count: Explicit rows of the program
    """

    status: LPStatus
    values: Tuple[Fraction, ...] = ()
    objective: Optional[Fraction] = None
    fractional_indices: Tuple[int, ...] = ()
    lower: Tuple[Fraction, ...] = ()
    upper: Tuple[Optional[Fraction], ...] = ()
    row_count: int = 0

    @property
    def is_optimal(self) -> bool:
        """True for an optimal vertex."""
        return self.status is LPStatus.OPTIMAL

    def value_map(self) -> Dict[int, Fraction]:
        """Nonzero coordinates by index."""
        return {i: v for i, v in enumerate(self.values) if v != 0}


def count_fractional(sol: BasicSolution, tol: Number = 0) -> int:
    """Number of coordinates in (lo + tol, hi - tol) that are not integral.

    With exact rationals tol stays 0.

    Raises:
        LPError: If the solution is not optimal
    """
    if not sol.is_optimal:
        raise LPError(f"Cannot count fractional coordinates of a {sol.status.value} solution")
    tol = to_fraction(tol)
    count = 0
    for i, value in enumerate(sol.values):
        if value.denominator == 1:
            continue
        if value <= sol.lower[i] + tol:
            continue
        if sol.upper[i] is not None and value >= sol.upper[i] - tol:
            continue
        count += 1
    return count
