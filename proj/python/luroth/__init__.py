"""Exact Luroth expansions, run-length statistics, certified pressure roots,
and the run-profile point construction.

Rationals cross the boundary as exact ``"p/q"`` strings; digit strings are
lists of ints (every digit >= 2).
"""

from ._core import (
    BudgetError,
    CertifiedValue,
    DomainError,
    MeasureParams,
    Schedule,
    build_schedule,
    check_mu_consistency,
    cylinder,
    cylinder_length,
    deletion_positions,
    digit_mass,
    digits,
    dim_E,
    dim_case,
    dim_surface,
    enumerate_D_n,
    evaluate,
    finite_depth_pressure_root,
    first_digit,
    fundamental_interval,
    gap,
    generate_point,
    growth_ratios,
    holder_estimate,
    inf_sup_estimate,
    is_admissible,
    k0_for_epsilon,
    lln_experiment,
    log_measure_mu,
    luroth_map,
    max_run,
    measure_mu,
    measure_params,
    pressure_sum,
    project_f,
    run_profile_check,
    run_trajectory,
    sample_digit,
    solve_s,
    solve_sM,
    zeta,
)

__all__ = [
    "BudgetError",
    "CertifiedValue",
    "DomainError",
    "MeasureParams",
    "Schedule",
    "build_schedule",
    "check_mu_consistency",
    "cylinder",
    "cylinder_length",
    "deletion_positions",
    "digit_mass",
    "digits",
    "dim_E",
    "dim_case",
    "dim_surface",
    "enumerate_D_n",
    "evaluate",
    "finite_depth_pressure_root",
    "first_digit",
    "fundamental_interval",
    "gap",
    "generate_point",
    "growth_ratios",
    "holder_estimate",
    "inf_sup_estimate",
    "is_admissible",
    "k0_for_epsilon",
    "lln_experiment",
    "log_measure_mu",
    "luroth_map",
    "max_run",
    "measure_mu",
    "measure_params",
    "pressure_sum",
    "project_f",
    "run_profile_check",
    "run_trajectory",
    "sample_digit",
    "solve_s",
    "solve_sM",
    "zeta",
]
