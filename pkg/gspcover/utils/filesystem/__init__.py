"""Filesystem helpers."""

from gspcover.utils.filesystem.atomic_write import atomic_write

__all__ = ['atomic_write']
