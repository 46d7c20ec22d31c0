"""Parameters of the geometric rounding and the bounds they imply."""

import math
from dataclasses import dataclass
from fractions import Fraction

from gspcover.core.model.numeric import Number, to_fraction
from gspcover.exceptions import InvalidParameterError

# e to 16 significant digits
DEFAULT_GAMMA = Fraction("2.718281828459045")
DEFAULT_GRID_SIZE = 8


@dataclass(frozen=True)
class ReductionParams:
    """Rounding base gamma > 1, offset alpha in [0, 1) and the alpha grid size G.

    Example:
        >>> ReductionParams(alpha=Fraction(3, 8)).alpha
        Fraction(3, 8)
    """

    gamma: Fraction = DEFAULT_GAMMA
    alpha: Fraction = Fraction(0)
    grid_size: int = DEFAULT_GRID_SIZE

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", to_fraction(self.gamma))
        object.__setattr__(self, "alpha", to_fraction(self.alpha))
        if self.gamma <= 1:
            raise InvalidParameterError(f"gamma must exceed 1, got {self.gamma}")
        if not 0 <= self.alpha < 1:
            raise InvalidParameterError(f"alpha must lie in [0, 1), got {self.alpha}")
        if self.grid_size < 1:
            raise InvalidParameterError(f"Grid size must be positive, got {self.grid_size}")

    def with_alpha(self, alpha: Number) -> "ReductionParams":
        return ReductionParams(self.gamma, to_fraction(alpha), self.grid_size)


def expected_blowup(gamma: Number = DEFAULT_GAMMA) -> float:
    """Expected cost factor gamma / ln(gamma) of a uniformly random alpha."""
    gamma = float(to_fraction(gamma))
    if gamma <= 1:
        raise InvalidParameterError("gamma must exceed 1")
    return gamma / math.log(gamma)


def grid_guarantee(gamma: Number = DEFAULT_GAMMA, grid_size: int = DEFAULT_GRID_SIZE) -> float:
    """Bound on the best alpha of the grid {g/G}: gamma^(1+1/G) / (G (gamma^(1/G) - 1)).

    Averaging the per-job geometric series over the G grid points gives
    this factor; it tends to gamma / ln(gamma) as G grows (about 2.892 at
    gamma = e, G = 8).
    """
    gamma = float(to_fraction(gamma))
    if gamma <= 1:
        raise InvalidParameterError("gamma must exceed 1")
    if grid_size < 1:
        raise InvalidParameterError("Grid size must be positive")
    root = gamma ** (1.0 / grid_size)
    return gamma * root / (grid_size * (root - 1.0))
