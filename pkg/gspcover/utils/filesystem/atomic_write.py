"""Atomic file writes for instances and reports."""

from pathlib import Path
from typing import Union


def atomic_write(file_path: Path, content: Union[str, bytes]) -> None:
    """Write a file through a sibling temp file and a replace.

    Readers never see a half-written instance or report. Text is encoded
    as UTF-8 with the newlines given, so CSV line endings survive.

    Args:
        file_path: Target file
        content: Text or bytes to write

    Raises:
        OSError: If writing or replacing fails

    Example:
        >>> atomic_write(Path("out/u1.json"), '{"kind": "ufp-cover"}')
        >>> Path("out/u1.json").read_text()
        '{"kind": "ufp-cover"}'
    """
    file_path = Path(file_path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    data = content.encode("utf-8") if isinstance(content, str) else content

    temp_path = file_path.with_suffix(file_path.suffix + ".tmp")
    temp_path.write_bytes(data)
    temp_path.replace(file_path)
