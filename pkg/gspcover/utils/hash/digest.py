"""Content digests of serialized instances."""

import hashlib
from typing import Union


def compute_digest(data: Union[str, bytes]) -> str:
    """SHA-256 hex digest; text is hashed as UTF-8.

    Two instances with equal canonical JSON share a digest, so reports can
    name the exact instance a row was computed on.

    Example:
        >>> compute_digest(b"hello")
        '2cf24dba5fb0a30e26e83b2ac5b9e29e1b161e5c1fa7425e73043362938b9824'
    """
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()
