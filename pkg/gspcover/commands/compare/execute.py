"""gspcover compare command implementation.

Runs a solver and the matching oracle over seeded (and optional file)
instances and writes report.csv plus summary.json.
"""

from pathlib import Path
from typing import Optional, Sequence

from gspcover.core.workbench.experiment import (
    SPEED_AUGMENTED,
    ExperimentConfig,
    load_config,
    run_experiment,
    write_experiment,
)


def execute(
    solver: Optional[str] = None,
    epsilon: str = "1/2",
    seed: int = 0,
    count: int = 10,
    instances: Sequence[str] = (),
    config: Optional[str] = None,
    cap: Optional[int] = None,
    oracle: bool = True,
    deterministic: bool = False,
    workers: int = 1,
    out: str = "results",
    progress: Optional[bool] = None,
) -> int:
    """Execute the 'gspcover compare' command.

    Args:
        solver: Solver name, required without a config file
        epsilon: Accuracy parameter as text
        seed: First seed; seeds seed..seed+count-1 are generated
        count: Number of generated instances
        instances: Extra instance files
        config: Experiment config JSON; replaces the flags above
        cap: Enumeration cap of the solver
        oracle: Compare against the exact solver
        deterministic: Leave runtimes out of the report
        workers: Parallel processes
        out: Output directory
        progress: Force the progress bar on or off

    Returns:
        int: Exit code (0 when every instance was solved feasibly)
    """
    from gspcover.utils.ui.color import bold, fail_marker, ok_marker, ratio_text

    if config is not None:
        experiment = load_config(Path(config))
    elif solver is None:
        print("Error: No solver given")
        print("Hint: Pass --solver or --config")
        return 1
    else:
        experiment = ExperimentConfig(
            solver=solver,
            epsilon=epsilon,
            seeds=tuple(range(seed, seed + count)),
            instance_files=tuple(instances),
            oracle=oracle,
            cap=cap,
            deterministic=deterministic,
            workers=workers,
        )

    report = run_experiment(experiment, progress=progress)
    report_path, summary_path = write_experiment(report, Path(out))

    print(bold(f"{experiment.solver} at epsilon {report.summary['epsilon']}"))
    for row in report.rows:
        marker = ok_marker() if row.feasible == "true" else fail_marker()
        ratio = float(row.ratio) if row.ratio else None
        guarantee = float(row.guarantee) if row.guarantee else None
        cost = row.cost or "-"
        oracle_cost = row.oracle_cost or "-"
        print(f"{marker} {row.instance_id:<20} cost {cost:<14} oracle {oracle_cost:<14} "
              f"ratio {ratio_text(ratio, guarantee)}")

    summary = report.summary
    print()
    print(f"  {summary['feasible']}/{summary['instances']} feasible, "
          f"{summary['compared']} compared, {summary['cap_hits']} cap hit(s)")
    if summary["max_ratio"] is not None:
        print(f"  max ratio {summary['max_ratio']:.4f}, mean ratio {summary['mean_ratio']:.4f}")
    if summary["comparison"] == SPEED_AUGMENTED:
        print("  ratios compare speed-augmented schedules with the unit-speed optimum")
    print(f"  report: {report_path}")
    print(f"  summary: {summary_path}")
    return 0 if summary["feasible"] == summary["instances"] else 1
