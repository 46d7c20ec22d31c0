"""Exact rational helpers.

Every solver works on ``fractions.Fraction``; floats only appear in reports.
Logarithms are taken exactly by adjusting a float estimate against exact
powers, so exponents never suffer from rounding at power boundaries.
"""

import math
from decimal import Decimal
from fractions import Fraction
from typing import Union

from gspcover.exceptions import InvalidParameterError

Number = Union[int, Fraction, Decimal, float, str]


def to_fraction(value: Number) -> Fraction:
    """Convert a number to an exact Fraction.
    
    Floats go through their shortest decimal repr, so ``0.1`` becomes
    ``1/10`` rather than the binary expansion.
    
    Args:
        value: int, Fraction, Decimal, float or numeric string
        
    Returns:
        Fraction: Exact rational value
        
    Raises:
        InvalidParameterError: If value is a bool or not numeric
        
    Example:
        >>> to_fraction(0.25)
        Fraction(1, 4)
        >>> to_fraction("7/3")
        Fraction(7, 3)
    """
    if isinstance(value, bool):
        raise InvalidParameterError(f"Not a number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            raise InvalidParameterError(f"Not a finite number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidParameterError(f"Not a number: {value!r}") from e
    raise InvalidParameterError(f"Not a number: {value!r}")


def _check_log_args(x: Fraction, base: Fraction) -> None:
    if base <= 1:
        raise InvalidParameterError(f"Logarithm base must exceed 1, got {base}")
    if x <= 0:
        raise InvalidParameterError(f"Logarithm argument must be positive, got {x}")


def _estimate_log(x: Fraction, base: Fraction) -> int:
    # log of numerator and denominator separately keeps huge values in range
    estimate = (math.log(x.numerator) - math.log(x.denominator)) / math.log(base)
    return int(math.floor(estimate))


def floor_log(x: Number, base: Number) -> int:
    """Largest integer k with base**k <= x.
    
    Example:
        >>> floor_log(Fraction(1, 3), Fraction(3, 2))
        -3
        >>> floor_log(8, 2)
        3
    """
    x, base = to_fraction(x), to_fraction(base)
    _check_log_args(x, base)
    k = _estimate_log(x, base)
    while base ** k > x:
        k -= 1
    while base ** (k + 1) <= x:
        k += 1
    return k


def ceil_log(x: Number, base: Number) -> int:
    """Smallest integer k with base**k >= x.
    
    Example:
        >>> ceil_log(4, Fraction(3, 2))
        4
        >>> ceil_log(1, Fraction(3, 2))
        0
    """
    x, base = to_fraction(x), to_fraction(base)
    _check_log_args(x, base)
    k = floor_log(x, base)
    if base ** k == x:
        return k
    return k + 1


def floor_power(x: Number, base: Number) -> Fraction:
    """Largest integral power of base that is <= x."""
    base = to_fraction(base)
    return base ** floor_log(x, base)


def ceil_power(x: Number, base: Number) -> Fraction:
    """Smallest integral power of base that is >= x."""
    base = to_fraction(base)
    return base ** ceil_log(x, base)


def exceeds_power(value: Fraction, base: Fraction, exponent: Fraction) -> bool:
    """Exact test of value > base**exponent for a rational exponent.
    
    With exponent = a/b (b > 0) the comparison is value**b > base**a,
    which stays in rational arithmetic.
    """
    if value <= 0:
        return False
    a, b = exponent.numerator, exponent.denominator
    return value ** b > base ** a


def format_fraction(value: Fraction) -> str:
    """Short human-readable form: integers plainly, others as num/den."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_float_str(value: Fraction, digits: int = 12) -> str:
    """Decimal rendering used by CSV reports."""
    return f"{float(value):.{digits}g}"
