"""Generators, solver registry and the experiment runner."""

from gspcover.core.workbench.generators import (
    generate_gsp,
    generate_ufp,
    generate_ufp_with_cover,
    random_step_function,
)
from gspcover.core.workbench.solvers import (
    SOLVERS,
    SolverOutcome,
    integer_due_dates,
    oracle_for,
    run_oracle,
    run_solver,
    solver_kind,
)
from gspcover.core.workbench.experiment import (
    REPORT_FILE,
    SAME_SPEED,
    SPEED_AUGMENTED,
    SUMMARY_FILE,
    ExperimentConfig,
    ExperimentReport,
    build_instances,
    comparison_of,
    load_config,
    ratio_of,
    run_experiment,
    summarize_rows,
    write_experiment,
)

__all__ = [
    'generate_gsp',
    'generate_ufp',
    'generate_ufp_with_cover',
    'random_step_function',
    'SOLVERS',
    'SolverOutcome',
    'integer_due_dates',
    'oracle_for',
    'run_oracle',
    'run_solver',
    'solver_kind',
    'REPORT_FILE',
    'SAME_SPEED',
    'SPEED_AUGMENTED',
    'SUMMARY_FILE',
    'ExperimentConfig',
    'ExperimentReport',
    'build_instances',
    'comparison_of',
    'load_config',
    'ratio_of',
    'run_experiment',
    'summarize_rows',
    'write_experiment',
]
