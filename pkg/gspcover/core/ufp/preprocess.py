"""Budget preprocessing for UFP-cover."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from gspcover.core.model.instances import UfpCoverInstance, UfpTask
from gspcover.core.model.numeric import Number, to_fraction
from gspcover.core.model.profile import induced_profile
from gspcover.exceptions import InvalidParameterError


@dataclass(frozen=True)
class PreprocessResult:
    """Outcome of preprocessing against a budget B.

    Attributes:
        reduced: Instance with the kept tasks and residual demands
        auto_selected: Tasks with cost at most eps * B / n, always chosen
        rejected: Tasks with cost above B
        threshold: The auto-selection threshold eps * B / n
    """

    reduced: UfpCoverInstance
    auto_selected: Tuple[UfpTask, ...]
    rejected: Tuple[UfpTask, ...]
    threshold: Fraction


def preprocess(inst: UfpCoverInstance, budget: Number, eps: Number) -> PreprocessResult:
    """Reject tasks costlier than B and force-select tasks cheaper than eps*B/n.

    Demands drop by the profile of the auto-selected tasks, clamped at 0.
    Zero-cost tasks always fall under the threshold, so B = 0 keeps only
    the free tasks.

    Args:
        inst: Instance to preprocess
        budget: Guessed optimum B >= 0
        eps: Accuracy parameter

    Returns:
        PreprocessResult: Reduced instance and the two removed task sets

    Raises:
        InvalidParameterError: If B < 0 or eps <= 0

    Example:
        >>> result = preprocess(u1, 3, Fraction(1, 2))
        >>> [task.id for task in result.rejected], result.threshold
        (['d'], Fraction(3, 8))
    """
    budget, eps = to_fraction(budget), to_fraction(eps)
    if budget < 0:
        raise InvalidParameterError(f"Budget must be nonnegative, got {budget}")
    if eps <= 0:
        raise InvalidParameterError(f"eps must be positive, got {eps}")

    threshold = eps * budget / inst.n if inst.n else Fraction(0)
    kept, auto, rejected = [], [], []
    for task in inst.tasks:
        if task.c > budget:
            rejected.append(task)
        elif task.c <= threshold:
            auto.append(task)
        else:
            kept.append(task)

    covered = induced_profile(auto, inst.m)
    residual = tuple(max(u - int(h), 0) for u, h in zip(inst.demands, covered.heights))
    reduced = UfpCoverInstance(inst.m, residual, tuple(kept))
    return PreprocessResult(reduced, tuple(auto), tuple(rejected), threshold)
