"""gspcover solve command."""

from .execute import execute

__all__ = ["execute"]
