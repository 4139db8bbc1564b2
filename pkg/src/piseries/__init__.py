"""Ramanujan-type series for 1/pi: exact construction, evaluation, and
rigorous verification of a four-parameter hypergeometric family."""

from .accelerate import accelerate, levin_u, wynn_epsilon
from .catalog import (
    CatalogEntry,
    CatalogFamily,
    catalog_entries,
    catalog_families,
    entry_by_id,
)
from .errors import (
    AgreementFailure,
    BoundUnavailable,
    BudgetExceeded,
    DomainError,
    InsufficientData,
    NumericBreakdown,
    PiSeriesError,
    PoleError,
)
from .pochhammer import HalfGamma, factorial, gamma_half, poch
from .piref import PiReference, compute_pi, eval_closed_form, eval_surd, sqrt_big
from .render import emit_latex, emit_text, parse_spec_latex
from .series import (
    ClosedFormRHS,
    NormalizedIdentity,
    SeriesSpec,
    SurdConstant,
    build_spec,
    normalize_identity,
    rhs_constant,
    sin_pi_rational,
    term,
    term_ratio,
)
from .summation import (
    SumResult,
    partial_sum_exact,
    partial_sum_float,
    sum_to_digits,
    tail_bound,
)
from .verify import (
    VerificationReport,
    report_to_dict,
    report_to_json,
    verify_gauss_reduced,
    verify_normalized,
    verify_spec,
    verify_symmetry,
)

__version__ = "0.1.0"

__all__ = [
    "AgreementFailure",
    "BoundUnavailable",
    "BudgetExceeded",
    "CatalogEntry",
    "CatalogFamily",
    "ClosedFormRHS",
    "DomainError",
    "HalfGamma",
    "InsufficientData",
    "NormalizedIdentity",
    "NumericBreakdown",
    "PiReference",
    "PiSeriesError",
    "PoleError",
    "SeriesSpec",
    "SumResult",
    "SurdConstant",
    "VerificationReport",
    "accelerate",
    "build_spec",
    "catalog_entries",
    "catalog_families",
    "compute_pi",
    "emit_latex",
    "emit_text",
    "entry_by_id",
    "eval_closed_form",
    "eval_surd",
    "factorial",
    "gamma_half",
    "levin_u",
    "normalize_identity",
    "parse_spec_latex",
    "partial_sum_exact",
    "partial_sum_float",
    "poch",
    "report_to_dict",
    "report_to_json",
    "rhs_constant",
    "sin_pi_rational",
    "sqrt_big",
    "sum_to_digits",
    "tail_bound",
    "term",
    "term_ratio",
    "verify_gauss_reduced",
    "verify_normalized",
    "verify_spec",
    "verify_symmetry",
    "wynn_epsilon",
]
