"""Generated univariate distributions and the beta-mixture Laplace law."""

from .bml import (
    BmlParams,
    as_distribution,
    bml_cdf,
    bml_hazard,
    bml_mgf,
    bml_mgf_integer,
    bml_moment_integer,
    bml_pdf,
    bml_quantile,
    bml_sample,
    bml_series_pdf,
    bml_survival,
    mgf_domain,
)
from .errors import ConvergenceError, DegenerateFitError, DomainError, GenlapError, RangeError
from .estimate import FitResult, fit_weighted, log_likelihood, mle_single
from .framework import compose, mix_generators, numeric_moment, numeric_quantile, sample_inverse
from .simstudy import StudyConfig, StudyRow, run_study, run_table

__all__ = [
    "BmlParams",
    "as_distribution",
    "bml_cdf",
    "bml_hazard",
    "bml_mgf",
    "bml_mgf_integer",
    "bml_moment_integer",
    "bml_pdf",
    "bml_quantile",
    "bml_sample",
    "bml_series_pdf",
    "bml_survival",
    "mgf_domain",
    "ConvergenceError",
    "DegenerateFitError",
    "DomainError",
    "GenlapError",
    "RangeError",
    "FitResult",
    "fit_weighted",
    "log_likelihood",
    "mle_single",
    "compose",
    "mix_generators",
    "numeric_moment",
    "numeric_quantile",
    "sample_inverse",
    "StudyConfig",
    "StudyRow",
    "run_study",
    "run_table",
]

__version__ = "0.1.0"
