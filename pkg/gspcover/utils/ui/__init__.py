"""UI Utilities Package."""

from gspcover.utils.ui.color import (
    bold,
    dim,
    fail_marker,
    green,
    ok_marker,
    ratio_text,
    red,
    reset_color_override,
    set_color_enabled,
    yellow,
)
from gspcover.utils.ui.progress import ProgressBar, track

__all__ = [
    'bold',
    'dim',
    'fail_marker',
    'green',
    'ok_marker',
    'ratio_text',
    'red',
    'reset_color_override',
    'set_color_enabled',
    'yellow',
    'ProgressBar',
    'track',
]
