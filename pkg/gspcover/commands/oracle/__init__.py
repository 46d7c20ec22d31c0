"""gspcover oracle command."""

from .execute import execute

__all__ = ["execute"]
