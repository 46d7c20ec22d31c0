"""Hash utilities."""

from gspcover.utils.hash.digest import compute_digest

__all__ = ['compute_digest']
