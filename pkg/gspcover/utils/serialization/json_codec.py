"""Canonical JSON for instances.

Documents carry ``"schema": 1`` and a ``"kind"`` of "ufp-cover" or "gsp".
Rationals are written as {"num": .., "den": ..}; integral times may also be
plain integers. Keys are sorted and indentation fixed, so the same instance
always serializes to the same bytes.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Union

from gspcover.core.model.instances import GspInstance, Job, UfpCoverInstance, UfpTask
from gspcover.core.model.step import StepCostFunction
from gspcover.exceptions import GspCoverError, SerializationError
from gspcover.utils.filesystem import atomic_write

SCHEMA_VERSION = 1
KIND_UFP = "ufp-cover"
KIND_GSP = "gsp"

Instance = Union[UfpCoverInstance, GspInstance]


def encode_rational(value: Fraction) -> Dict[str, int]:
    """{"num": numerator, "den": denominator}."""
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def decode_rational(data: Any) -> Fraction:
    """Inverse of encode_rational; plain integers are accepted too.

    Raises:
        SerializationError: If data is neither an integer nor a num/den object
    """
    if isinstance(data, bool):
        raise SerializationError(f"Expected a rational, got {data!r}")
    if isinstance(data, int):
        return Fraction(data)
    if isinstance(data, dict) and set(data) == {"num", "den"}:
        num, den = data["num"], data["den"]
        if not isinstance(num, int) or not isinstance(den, int) or den <= 0:
            raise SerializationError(f"Bad rational {data!r}")
        return Fraction(num, den)
    raise SerializationError(f"Expected a rational, got {data!r}")


def _encode_time(value: Fraction) -> Any:
    return value.numerator if value.denominator == 1 else encode_rational(value)


def encode_function(f: StepCostFunction) -> Dict[str, Any]:
    return {
        "breakpoints": [[_encode_time(t), encode_rational(v)] for t, v in f.breakpoints],
        "unavailable_after": (
            None if f.unavailable_after is None else _encode_time(f.unavailable_after)
        ),
    }


def decode_function(data: Any) -> StepCostFunction:
    _expect_keys(data, {"breakpoints", "unavailable_after"}, "function")
    points = []
    for pair in data["breakpoints"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise SerializationError(f"Breakpoint must be a [time, value] pair, got {pair!r}")
        points.append((decode_rational(pair[0]), decode_rational(pair[1])))
    bound = data["unavailable_after"]
    return StepCostFunction(tuple(points), None if bound is None else decode_rational(bound))


def _expect_keys(data: Any, required: set, what: str) -> None:
    if not isinstance(data, dict):
        raise SerializationError(f"{what} must be an object")
    missing = required - set(data)
    if missing:
        raise SerializationError(f"{what} is missing {sorted(missing)}")


def _expect_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SerializationError(f"{what} must be an integer, got {value!r}")
    return value


def ufp_to_dict(inst: UfpCoverInstance) -> Dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "kind": KIND_UFP,
        "m": inst.m,
        "demands": list(inst.demands),
        "tasks": [
            {"id": task.id, "s": task.s, "t": task.t, "p": task.p, "c": encode_rational(task.c)}
            for task in inst.tasks
        ],
    }


def ufp_from_dict(data: Dict[str, Any]) -> UfpCoverInstance:
    _expect_keys(data, {"m", "demands", "tasks"}, "ufp-cover instance")
    tasks = []
    for entry in data["tasks"]:
        _expect_keys(entry, {"id", "s", "t", "p", "c"}, "task")
        tasks.append(UfpTask(
            str(entry["id"]),
            _expect_int(entry["s"], "s"),
            _expect_int(entry["t"], "t"),
            _expect_int(entry["p"], "p"),
            decode_rational(entry["c"]),
        ))
    demands = tuple(_expect_int(u, "demand") for u in data["demands"])
    return UfpCoverInstance(_expect_int(data["m"], "m"), demands, tuple(tasks))


def _job_to_dict(job: Job) -> Dict[str, Any]:
    return {"id": job.id, "p": job.p, "r": job.r, "f": encode_function(job.f), "u": job.u, "w": job.w}


def gsp_to_dict(inst: GspInstance) -> Dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "kind": KIND_GSP,
        "weight_bound": inst.weight_bound,
        "global_functions": [encode_function(g) for g in inst.global_functions],
        "jobs": [_job_to_dict(job) for job in inst.jobs],
    }


def gsp_from_dict(data: Dict[str, Any]) -> GspInstance:
    _expect_keys(data, {"jobs", "global_functions", "weight_bound"}, "gsp instance")
    jobs: List[Job] = []
    for entry in data["jobs"]:
        _expect_keys(entry, {"id", "p", "r", "f"}, "job")
        u, w = entry.get("u"), entry.get("w")
        jobs.append(Job(
            id=_expect_int(entry["id"], "id"),
            p=_expect_int(entry["p"], "p"),
            r=_expect_int(entry["r"], "r"),
            f=decode_function(entry["f"]),
            u=None if u is None else _expect_int(u, "u"),
            w=None if w is None else _expect_int(w, "w"),
        ))
    functions = tuple(decode_function(g) for g in data["global_functions"])
    return GspInstance(tuple(jobs), functions, _expect_int(data["weight_bound"], "weight_bound"))


def instance_to_dict(inst: Instance) -> Dict[str, Any]:
    if isinstance(inst, UfpCoverInstance):
        return ufp_to_dict(inst)
    if isinstance(inst, GspInstance):
        return gsp_to_dict(inst)
    raise SerializationError(f"Cannot serialize {type(inst).__name__}")


def instance_from_dict(data: Any) -> Instance:
    """Decode an instance document of either kind.

    Raises:
        SerializationError: On an unknown schema or kind, or malformed fields
    """
    _expect_keys(data, {"schema", "kind"}, "instance document")
    if data["schema"] != SCHEMA_VERSION:
        raise SerializationError(f"Unsupported schema version {data['schema']!r}")
    try:
        if data["kind"] == KIND_UFP:
            return ufp_from_dict(data)
        if data["kind"] == KIND_GSP:
            return gsp_from_dict(data)
    except SerializationError:
        raise
    except GspCoverError as e:
        raise SerializationError(f"Invalid instance: {e}") from e
    raise SerializationError(f"Unknown instance kind {data['kind']!r}")


def dumps_canonical(data: Any) -> str:
    """Sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def dumps_instance(inst: Instance) -> str:
    return dumps_canonical(instance_to_dict(inst))


def loads_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SerializationError(f"Not valid JSON: {e}") from e
    return instance_from_dict(data)


def save_instance(path: Path, inst: Instance) -> None:
    atomic_write(Path(path), dumps_instance(inst))


def load_instance(path: Path) -> Instance:
    """Read an instance file.

    Raises:
        SerializationError: If the file is missing or malformed
    """
    path = Path(path)
    if not path.is_file():
        raise SerializationError(f"Instance file not found: {path}")
    return loads_instance(path.read_text(encoding="utf-8"))
