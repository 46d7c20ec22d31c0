"""Enumeration caps.

Every exponential enumeration in gspcover is bounded by one of these caps.
Callers either ask ``check_cap`` for a verdict or let ``enforce_cap`` raise.
"""

from typing import Tuple

from gspcover.exceptions import CapExceededError


# Oracle caps
DEFAULT_UFP_ORACLE_CAP = 20
DEFAULT_GSP_ORACLE_CAP = 9
DEFAULT_DUE_DATE_CAP = 2_000_000

# Approximation scheme caps
DEFAULT_GROUP_CANDIDATE_CAP = 64
DEFAULT_COMBINATION_CAP = 1024
DEFAULT_PATTERN_CAP = 20_000
DEFAULT_GUESS_CAP = 50_000


def check_cap(what: str, size: int, cap: int) -> Tuple[bool, str]:
    """Check if an enumeration size is within its cap.
    
    Args:
        what: Name of the enumerated quantity, used in the message
        size: Number of items the enumeration would visit
        cap: Maximum allowed
        
    Returns:
        tuple: (is_valid, error_message)
            - is_valid: True if size <= cap
            - error_message: Empty string if valid, error description if not
            
    Example:
        >>> check_cap("tasks", 12, 20)
        (True, '')
        >>> check_cap("tasks", 25, 20)
        (False, 'tasks: 25 exceeds cap of 20')
    """
    if cap < 0:
        return False, f"{what}: cap must be nonnegative, got {cap}"
    if size > cap:
        return False, f"{what}: {size} exceeds cap of {cap}"
    return True, ""


def enforce_cap(what: str, size: int, cap: int) -> None:
    """Raise CapExceededError when size is over cap.
    
    Raises:
        CapExceededError: If check_cap fails
    """
    ok, message = check_cap(what, size, cap)
    if not ok:
        raise CapExceededError(message)
