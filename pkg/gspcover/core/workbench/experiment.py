"""Batch experiments: instances in, CSV rows and a JSON summary out."""

import json
import logging
import multiprocessing
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from gspcover.core.model.numeric import format_fraction, to_float_str, to_fraction
from gspcover.core.workbench.generators import generate_gsp, generate_ufp
from gspcover.core.workbench.solvers import Instance, run_oracle, run_solver, solver_kind
from gspcover.exceptions import CapExceededError, InvalidParameterError, SerializationError
from gspcover.utils.filesystem import atomic_write
from gspcover.utils.hash import compute_digest
from gspcover.utils.serialization import (
    ReportRow,
    dumps_canonical,
    dumps_instance,
    load_instance,
    write_report,
)
from gspcover.utils.ui import track

logger = logging.getLogger(__name__)

REPORT_FILE = "report.csv"
SUMMARY_FILE = "summary.json"
SAME_SPEED = "same-speed"
SPEED_AUGMENTED = "speed-augmented"

_GENERATOR_KEYS = {
    "ufp-cover": {"n", "m", "demand_range", "size_range", "cost_range"},
    "gsp": {"n", "k", "releases", "weight_bound", "size_range", "horizon"},
}


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment.

    Attributes:
        solver: Solver name (see SOLVERS)
        epsilon: Accuracy parameter
        seeds: Seeds of generated instances
        generator: Keyword arguments of the generator for the solver's kind
        instance_files: Instance files used in addition to generated ones
        oracle: Compare against the exact solver
        cap: Cap handed to the solver
        oracle_cap: Cap handed to the oracle
        deterministic: Leave runtimes out so that reruns give identical reports
        workers: Processes solving instances in parallel, 1 runs inline
    """

    solver: str
    epsilon: Fraction = Fraction(1, 2)
    seeds: Tuple[int, ...] = ()
    generator: Dict[str, Any] = field(default_factory=dict)
    instance_files: Tuple[str, ...] = ()
    oracle: bool = True
    cap: Optional[int] = None
    oracle_cap: Optional[int] = None
    deterministic: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        kind = solver_kind(self.solver)
        object.__setattr__(self, "epsilon", to_fraction(self.epsilon))
        object.__setattr__(self, "seeds", tuple(int(seed) for seed in self.seeds))
        object.__setattr__(self, "instance_files", tuple(str(p) for p in self.instance_files))
        unknown = set(self.generator) - _GENERATOR_KEYS[kind]
        if unknown:
            raise InvalidParameterError(f"Unknown generator options for {kind}: {sorted(unknown)}")
        if self.epsilon <= 0:
            raise InvalidParameterError(f"epsilon must be positive, got {self.epsilon}")
        if self.workers < 1:
            raise InvalidParameterError(f"workers must be at least 1, got {self.workers}")

    @property
    def kind(self) -> str:
        return solver_kind(self.solver)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentConfig":
        """Build from a decoded JSON config.

        Raises:
            SerializationError: If a field is missing or unknown
        """
        if not isinstance(data, dict) or "solver" not in data:
            raise SerializationError("Experiment config needs a 'solver' field")
        known = {
            "solver", "epsilon", "seeds", "generator", "instance_files", "oracle", "cap",
            "oracle_cap", "deterministic", "workers",
        }
        unknown = set(data) - known
        if unknown:
            raise SerializationError(f"Unknown config fields: {sorted(unknown)}")
        values = dict(data)
        if "epsilon" in values:
            values["epsilon"] = to_fraction(str(values["epsilon"]))
        generator = dict(values.get("generator", {}))
        for key in ("demand_range", "size_range", "cost_range", "releases"):
            if key in generator:
                generator[key] = tuple(generator[key])
        values["generator"] = generator
        return cls(**values)


def load_config(path: Path) -> ExperimentConfig:
    path = Path(path)
    if not path.is_file():
        raise SerializationError(f"Config file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise SerializationError(f"Config is not valid JSON: {e}") from e
    return ExperimentConfig.from_dict(data)


@dataclass
class ExperimentReport:
    """Rows of a run and its summary."""

    rows: List[ReportRow]
    summary: Dict[str, Any]


def build_instances(config: ExperimentConfig) -> List[Tuple[str, Instance]]:
    """(instance id, instance) pairs: generated ones first, then files."""
    instances: List[Tuple[str, Instance]] = []
    options = dict(config.generator)
    for seed in config.seeds:
        if config.kind == "ufp-cover":
            inst: Instance = generate_ufp(seed, options.get("n", 8), options.get("m", 5), **{
                key: value for key, value in options.items() if key not in ("n", "m")
            })
        else:
            inst = generate_gsp(seed, options.get("n", 5), **{
                key: value for key, value in options.items() if key != "n"
            })
        instances.append((f"{config.kind}-s{seed}", inst))
    for name in config.instance_files:
        inst = load_instance(Path(name))
        instances.append((Path(name).stem, inst))
    return instances


def ratio_of(cost: Optional[Fraction], oracle_cost: Optional[Fraction]) -> Optional[Fraction]:
    """cost / oracle cost; 1 when both are 0, None when undefined."""
    if cost is None or oracle_cost is None:
        return None
    if oracle_cost == 0:
        return Fraction(1) if cost == 0 else None
    return cost / oracle_cost


def comparison_of(speed: Optional[Fraction]) -> str:
    """"speed-augmented" when the schedule needs a machine faster than 1."""
    if speed is not None and speed > 1:
        return SPEED_AUGMENTED
    return SAME_SPEED


def _text(value: Optional[Fraction]) -> str:
    return "" if value is None else to_float_str(value)


@dataclass(frozen=True)
class _Evaluation:
    """Per-instance result handed back from a worker."""

    instance_id: str
    digest: str
    row: ReportRow
    ratio: Optional[Fraction]
    cap_hits: int
    oracle_cap_hit: bool


def _evaluate(config: ExperimentConfig, instance_id: str, inst: Instance) -> _Evaluation:
    digest = compute_digest(dumps_instance(inst))
    epsilon = format_fraction(config.epsilon)
    started = time.perf_counter()
    try:
        outcome = run_solver(config.solver, inst, config.epsilon, config.cap)
    except CapExceededError as e:
        logger.warning("%s on %s: %s", config.solver, instance_id, e)
        row = ReportRow(instance_id, config.solver, epsilon, cost="", feasible="cap")
        return _Evaluation(instance_id, digest, row, None, 1, False)
    elapsed = time.perf_counter() - started
    cap_hits = sum(value for key, value in outcome.stats.items() if key.endswith("cap_hits"))

    oracle_cost = None
    oracle_cap_hit = False
    if config.oracle:
        try:
            oracle_cost = run_oracle(inst, config.oracle_cap).cost
        except CapExceededError as e:
            logger.warning("oracle on %s: %s", instance_id, e)
            oracle_cap_hit = True
    ratio = ratio_of(outcome.cost, oracle_cost)

    row = ReportRow(
        instance_id=instance_id,
        solver=config.solver,
        epsilon=epsilon,
        cost=_text(outcome.cost),
        oracle_cost=_text(oracle_cost),
        ratio=_text(ratio),
        guarantee=_text(outcome.guarantee),
        runtime_seconds="" if config.deterministic else f"{elapsed:.6f}",
        feasible="true" if outcome.feasible else "false",
        speed_factor=_text(outcome.speed),
        comparison=comparison_of(outcome.speed),
    )
    return _Evaluation(instance_id, digest, row, ratio, cap_hits, oracle_cap_hit)


def _evaluate_packed(task: Tuple[ExperimentConfig, str, Instance]) -> _Evaluation:
    return _evaluate(*task)


def run_experiment(config: ExperimentConfig, progress: Optional[bool] = None) -> ExperimentReport:
    """Run the solver (and the oracle) on every instance of a config.

    With ``config.workers > 1`` instances are solved in a process pool;
    rows are still collected in instance order by this process alone.

    Args:
        config: Experiment description
        progress: Force the progress bar on or off

    Returns:
        ExperimentReport: One row per instance plus counts and ratio statistics
    """
    instances = build_instances(config)
    tasks = [(config, instance_id, inst) for instance_id, inst in instances]

    if config.workers == 1 or len(tasks) < 2:
        evaluations = [
            _evaluate_packed(task) for task in track(tasks, config.solver, enabled=progress)
        ]
    else:
        with multiprocessing.Pool(min(config.workers, len(tasks))) as pool:
            evaluations = list(track(
                pool.imap(_evaluate_packed, tasks), config.solver, total=len(tasks),
                enabled=progress,
            ))

    rows = [evaluation.row for evaluation in evaluations]
    ratios = [float(e.ratio) for e in evaluations if e.ratio is not None]
    guarantees = {row.guarantee for row in rows if row.guarantee}
    comparisons = {row.comparison for row in rows if row.comparison}
    summary = {
        "schema": 1,
        "solver": config.solver,
        "epsilon": format_fraction(config.epsilon),
        "instances": len(rows),
        "feasible": sum(1 for row in rows if row.feasible == "true"),
        "compared": len(ratios),
        "max_ratio": float(np.max(ratios)) if ratios else None,
        "mean_ratio": float(np.mean(ratios)) if ratios else None,
        "guarantee": guarantees.pop() if len(guarantees) == 1 else None,
        "comparison": comparisons.pop() if len(comparisons) == 1 else None,
        "cap_hits": sum(e.cap_hits for e in evaluations),
        "oracle_cap_hits": sum(1 for e in evaluations if e.oracle_cap_hit),
        "digests": {e.instance_id: e.digest for e in evaluations},
    }
    logger.debug("experiment %s: %d rows", config.solver, len(rows))
    return ExperimentReport(rows, summary)


def write_experiment(report: ExperimentReport, out_dir: Path) -> Tuple[Path, Path]:
    """Write report.csv and summary.json into out_dir.

    Returns:
        tuple: (report path, summary path)
    """
    out_dir = Path(out_dir)
    report_path = out_dir / REPORT_FILE
    summary_path = out_dir / SUMMARY_FILE
    write_report(report_path, report.rows)
    atomic_write(summary_path, dumps_canonical(report.summary))
    return report_path, summary_path


def summarize_rows(rows: Sequence[Dict[str, str]]) -> Dict[str, Any]:
    """Statistics of report rows read back from CSV, grouped by solver."""
    by_solver: Dict[str, Dict[str, Any]] = {}
    for row in rows:
        entry = by_solver.setdefault(
            row["solver"], {"instances": 0, "feasible": 0, "ratios": [], "comparisons": set()}
        )
        if row.get("comparison"):
            entry["comparisons"].add(row["comparison"])
        entry["instances"] += 1
        entry["feasible"] += row["feasible"] == "true"
        if row["ratio"]:
            entry["ratios"].append(float(row["ratio"]))
    summary = {}
    for solver, entry in sorted(by_solver.items()):
        ratios = np.asarray(entry["ratios"], dtype=float)
        summary[solver] = {
            "instances": entry["instances"],
            "feasible": entry["feasible"],
            "compared": int(ratios.size),
            "max_ratio": float(ratios.max()) if ratios.size else None,
            "mean_ratio": float(ratios.mean()) if ratios.size else None,
            "comparison": ",".join(sorted(entry["comparisons"])) or None,
        }
    return summary
