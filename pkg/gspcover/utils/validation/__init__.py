"""Cap validation utilities."""

from gspcover.utils.validation.caps import (
    DEFAULT_COMBINATION_CAP,
    DEFAULT_DUE_DATE_CAP,
    DEFAULT_GROUP_CANDIDATE_CAP,
    DEFAULT_GSP_ORACLE_CAP,
    DEFAULT_GUESS_CAP,
    DEFAULT_PATTERN_CAP,
    DEFAULT_UFP_ORACLE_CAP,
    check_cap,
    enforce_cap,
)

__all__ = [
    'DEFAULT_COMBINATION_CAP',
    'DEFAULT_DUE_DATE_CAP',
    'DEFAULT_GROUP_CANDIDATE_CAP',
    'DEFAULT_GSP_ORACLE_CAP',
    'DEFAULT_GUESS_CAP',
    'DEFAULT_PATTERN_CAP',
    'DEFAULT_UFP_ORACLE_CAP',
    'check_cap',
    'enforce_cap',
]
