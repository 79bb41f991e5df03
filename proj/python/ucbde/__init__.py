"""Batch Bayesian optimization with a UCB first point and Sobol distance exploration."""

from ._core import (
    BenchmarkFunction,
    CandidatePool,
    GpModel,
    ObservationSet,
    RefineBudget,
    SobolEngine,
    UcbdeError,
    benchmark_names,
    default_lengthscale_grid,
    direction_table_max_dim,
    evaluate_batch,
    farthest_point_continuous,
    fill_batch_de,
    make_benchmark,
    maximize_acquisition,
    policy_names,
    propose_batch,
    run_experiment,
    runs_to_csv,
    se_kernel,
    sobol_points,
    standardize,
    sweep_m,
    timing_study,
    ucb_beta,
    ucb_value,
)

__all__ = [name for name in dir() if not name.startswith("_")]
