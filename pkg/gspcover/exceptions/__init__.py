"""gspcover Custom Exceptions.

This module defines custom exception classes for gspcover operations.
All exceptions inherit from the base GspCoverError class.

Solvers report infeasibility as a value (a ``None`` result) and reserve
exceptions for malformed input, exhausted caps and broken post-conditions.
"""


class GspCoverError(Exception):
    """Base exception for all gspcover errors.
    
    All gspcover-specific exceptions should inherit from this class.
    """
    pass


class InvalidInstanceError(GspCoverError):
    """Instance data is malformed.
    
    Raised when a job, task or cost function violates its invariants,
    such as a task outside the path or a decreasing step function.
    """
    pass


class InvalidParameterError(GspCoverError):
    """Algorithm parameter out of range.
    
    Raised when epsilon, gamma, alpha, the grid size, a budget or a
    cap lies outside the domain the algorithm is defined for.
    """
    pass


class CostUnavailableError(GspCoverError):
    """Cost function evaluated where it is unavailable.
    
    Raised when a step function with an unavailable-after bound is
    evaluated past that bound (the infinite part of the function).
    """
    pass


class InvalidScheduleError(GspCoverError):
    """Schedule is not valid for its instance.
    
    Raised when jobs overlap, start before their release date or are
    missing from a schedule that an operation requires to be valid.
    """
    pass


class InvalidCoverError(GspCoverError):
    """Cover cannot be lifted to a schedule.
    
    Raised when a cover of a reduced instance misses every task of
    some job, or when the lifted schedule breaks the cost bound.
    """
    pass


class CapExceededError(GspCoverError):
    """Enumeration cap exceeded.
    
    Raised when an exhaustive oracle or enumeration would exceed its
    configured cap. The CLI maps this to exit code 3.
    """
    pass


class InfeasibleInstanceError(GspCoverError):
    """Instance has no feasible solution.
    
    Raised at the command boundary when a solver reports that no
    feasible solution exists. The CLI maps this to exit code 2.
    """
    pass


class LPError(GspCoverError):
    """Linear program is malformed or a solve broke an invariant.
    
    Raised on dimension mismatches and when an optimal solution
    violates the vertex property.
    """
    pass


class RoundingError(GspCoverError):
    """Rounding post-condition failed.
    
    Raised when an LP rounding step produces an assignment that breaks
    one of the constraints or cost bounds it is required to keep.
    """
    pass


class SerializationError(GspCoverError):
    """Document does not follow the instance schema.
    
    Raised when reading JSON instances or experiment configs with a
    missing field, wrong kind or unsupported schema version.
    """
    pass
