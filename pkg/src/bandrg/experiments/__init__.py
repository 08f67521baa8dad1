"""Module containing the numerical experiments on the quartic oscillator."""

__all__ = [
    "REFERENCE_CUTOFF", "reference_spectrum", "ConvergenceReport", "convergence_study",

    "DEFAULT_INITIAL_CUTOFF", "PUBLISHED_SPECTRA", "ComparisonRow",
    "ComparisonReport", "compare_rg_pc",

    "xi_flow_report",
]

from bandrg.experiments.comparison import (
    DEFAULT_INITIAL_CUTOFF,
    PUBLISHED_SPECTRA,
    ComparisonReport,
    ComparisonRow,
    compare_rg_pc,
)
from bandrg.experiments.reference import (
    REFERENCE_CUTOFF,
    ConvergenceReport,
    convergence_study,
    reference_spectrum,
)
from bandrg.experiments.xi_report import xi_flow_report
