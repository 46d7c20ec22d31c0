"""gspcover generate command implementation.

Writes a seeded random instance as canonical JSON.
"""

from pathlib import Path
from typing import Optional, Sequence

from gspcover.core.workbench.generators import generate_gsp, generate_ufp
from gspcover.utils.hash import compute_digest
from gspcover.utils.serialization import dumps_instance
from gspcover.utils.filesystem import atomic_write


def execute(
    kind: str,
    seed: int = 0,
    n: int = 6,
    m: int = 5,
    k: int = 2,
    releases: Sequence[int] = (0,),
    weight_bound: int = 3,
    out: Optional[str] = None,
) -> int:
    """Execute the 'gspcover generate' command.

    Args:
        kind: "ufp" or "gsp"
        seed: Random seed
        n: Number of tasks (ufp) or jobs (gsp)
        m: Number of path edges (ufp)
        k: Number of class functions (gsp)
        releases: Release dates jobs are drawn from (gsp)
        weight_bound: Largest job weight (gsp)
        out: Target file; the JSON goes to stdout when omitted

    Returns:
        int: Exit code (0 for success, 1 for error)
    """
    if kind == "ufp":
        inst = generate_ufp(seed, n, m)
    elif kind == "gsp":
        inst = generate_gsp(seed, n, k=k, releases=tuple(releases), weight_bound=weight_bound)
    else:
        print(f"Error: Unknown instance kind '{kind}'")
        print("Hint: Use 'ufp' or 'gsp'")
        return 1

    text = dumps_instance(inst)
    if out is None:
        print(text, end="")
        return 0

    atomic_write(Path(out), text)
    from gspcover.utils.ui.color import ok_marker
    print(f"{ok_marker()} Wrote {kind} instance to {out}")
    print(f"  seed {seed}, sha256 {compute_digest(text)[:12]}")
    return 0
