"""Progress bar for batch experiments.

The bar is drawn on stderr so that reports written to stdout stay clean,
and it stays silent when stderr is not a terminal.
"""

import sys
import time
from typing import Iterable, Iterator, Optional, TypeVar

T = TypeVar("T")


class ProgressBar:
    """Single-line progress bar.

    Attributes:
        total: Number of steps
        description: Label in front of the bar
        width: Bar width in characters
    """

    def __init__(self, total: int, description: str = "", width: int = 30, enabled: Optional[bool] = None):
        self.total = max(1, total)
        self.description = description
        self.width = width
        self.current = 0
        self._last_draw = 0.0
        if enabled is None:
            try:
                enabled = hasattr(sys.stderr, "isatty") and sys.stderr.isatty()
            except AttributeError:
                enabled = False
        self.enabled = enabled

    def start(self) -> None:
        if self.enabled:
            self.update(0, force=True)

    def update(self, current: int, force: bool = False) -> None:
        """Move to step ``current``; redraws at most every 50 ms."""
        self.current = min(current, self.total)
        if not self.enabled:
            return
        now = time.time()
        if not force and now - self._last_draw < 0.05 and self.current < self.total:
            return
        self._last_draw = now

        filled = int(self.width * self.current / self.total)
        bar = "#" * filled + "-" * (self.width - filled)
        label = f"{self.description} " if self.description else ""
        sys.stderr.write(f"\r{label}[{bar}] {self.current}/{self.total}")
        sys.stderr.flush()

    def finish(self) -> None:
        if not self.enabled:
            return
        self.update(self.total, force=True)
        sys.stderr.write("\n")
        sys.stderr.flush()


def track(
    sequence: Iterable[T],
    description: str = "",
    total: Optional[int] = None,
    enabled: Optional[bool] = None,
) -> Iterator[T]:
    """Yield from a sequence while advancing a progress bar.

    Args:
        sequence: Items to iterate
        description: Label of the bar
        total: Number of items, len(sequence) by default
        enabled: Force the bar on or off; terminal detection when None
    """
    if total is None:
        try:
            total = len(sequence)  # type: ignore[arg-type]
        except TypeError:
            total = 0
    bar = ProgressBar(total, description, enabled=enabled)
    bar.start()
    for i, item in enumerate(sequence, 1):
        yield item
        bar.update(i)
    bar.finish()
