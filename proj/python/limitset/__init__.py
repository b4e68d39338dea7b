"""Boundary-set estimation of bivariate extremal dependence.

The heavy lifting lives in the compiled ``_core`` module; this package
re-exports its public names unchanged.
"""

from ._core import (
    BivariateSample,
    BootstrapPlan,
    BootstrapResult,
    BoundaryPoints,
    CaseAggregate,
    CopulaSpec,
    DependenceSummary,
    FitResult,
    LimitSetEstimate,
    LocalFit,
    LocalStage,
    NormalTailFit,
    NumericalError,
    PipelineConfig,
    RawSample,
    ScalarScore,
    StudyConfig,
    StudyRecord,
    StudyResult,
    SummaryConfig,
    TauCurve,
    ValidationError,
    alpha_from_boundary,
    beta_fit,
    bootstrap_measures,
    consistency_violations,
    draisma_eta,
    estimate,
    estimate_local,
    eta_from_boundary,
    gauge,
    hill_eta,
    hill_lambda,
    hill_tau,
    lambda_from_boundary,
    peng_eta,
    run_study,
    sample_copula,
    stationary_bootstrap_indices,
    summarize,
    tau_from_boundary,
    tau_is_monotone,
    to_exponential_margins,
    true_boundary,
    true_measures,
)

__all__ = [
    "BivariateSample",
    "BootstrapPlan",
    "BootstrapResult",
    "BoundaryPoints",
    "CaseAggregate",
    "CopulaSpec",
    "DependenceSummary",
    "FitResult",
    "LimitSetEstimate",
    "LocalFit",
    "LocalStage",
    "NormalTailFit",
    "NumericalError",
    "PipelineConfig",
    "RawSample",
    "ScalarScore",
    "StudyConfig",
    "StudyRecord",
    "StudyResult",
    "SummaryConfig",
    "TauCurve",
    "ValidationError",
    "alpha_from_boundary",
    "beta_fit",
    "bootstrap_measures",
    "consistency_violations",
    "draisma_eta",
    "estimate",
    "estimate_local",
    "eta_from_boundary",
    "gauge",
    "hill_eta",
    "hill_lambda",
    "hill_tau",
    "lambda_from_boundary",
    "peng_eta",
    "run_study",
    "sample_copula",
    "stationary_bootstrap_indices",
    "summarize",
    "tau_from_boundary",
    "tau_is_monotone",
    "to_exponential_margins",
    "true_boundary",
    "true_measures",
]

__version__ = "0.1.0"
