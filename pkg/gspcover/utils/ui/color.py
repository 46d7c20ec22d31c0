"""Terminal colors for command output.

ANSI sequences are only emitted on a terminal, and never when NO_COLOR is
set or --no-color was given.
"""

import os
import sys
from typing import Optional

_ANSI_RESET = "\033[0m"
_ANSI_BOLD = "\033[1m"
_ANSI_DIM = "\033[2m"
_ANSI_RED = "\033[31m"
_ANSI_GREEN = "\033[32m"
_ANSI_YELLOW = "\033[33m"

# None means detect from the environment
_USE_COLOR_OVERRIDE: Optional[bool] = None


def _should_use_color() -> bool:
    if _USE_COLOR_OVERRIDE is not None:
        return _USE_COLOR_OVERRIDE
    if os.environ.get("NO_COLOR"):
        return False
    try:
        if hasattr(sys.stdout, "isatty") and not sys.stdout.isatty():
            return False
    except AttributeError:
        pass
    return True


def set_color_enabled(enabled: bool) -> None:
    """Force colors on or off."""
    global _USE_COLOR_OVERRIDE
    _USE_COLOR_OVERRIDE = enabled


def reset_color_override() -> None:
    """Go back to environment detection."""
    global _USE_COLOR_OVERRIDE
    _USE_COLOR_OVERRIDE = None


def _format(text: str, code: str) -> str:
    if not _should_use_color():
        return text
    return f"{code}{text}{_ANSI_RESET}"


def red(text: str) -> str:
    return _format(text, _ANSI_RED)


def green(text: str) -> str:
    return _format(text, _ANSI_GREEN)


def yellow(text: str) -> str:
    return _format(text, _ANSI_YELLOW)


def bold(text: str) -> str:
    return _format(text, _ANSI_BOLD)


def dim(text: str) -> str:
    return _format(text, _ANSI_DIM)


def ok_marker() -> str:
    """Green "[OK]"."""
    return green("[OK]")


def fail_marker() -> str:
    """Red "[FAIL]"."""
    return red("[FAIL]")


def ratio_text(ratio: Optional[float], guarantee: Optional[float]) -> str:
    """A cost ratio, yellow when it exceeds the reported guarantee.

    Example:
        >>> set_color_enabled(False)
        >>> ratio_text(1.25, 4.5)
        '1.2500'
    """
    if ratio is None:
        return dim("n/a")
    text = f"{ratio:.4f}"
    if guarantee is not None and ratio > guarantee:
        return yellow(text)
    return text
