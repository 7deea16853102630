"""Exact-arithmetic instability checks for syzygy bundles on polarized
surfaces: intersection theory on a fixed Picard basis, nef/ample cone tests
against effective-cone generators, Riemann-Roch section counts, the
slope-comparison quadratic in the twist parameter, and a constructive search
for a destabilizing polarization."""

from ._rational import BACKEND, Rational, rat_str, rational
from .catalog import CatalogEntry, catalog_entry, load_catalog
from .chern import (
    VANISHING_ASSUMPTION,
    BundleNumerics,
    chi,
    h0_under_vanishing,
    slope_denominator,
    tensor_line,
    twist,
)
from .cones import (
    ConeMembership,
    NefBoundaryResult,
    is_ample,
    is_nef,
    max_nef_parameter,
    perturb_to_ample,
)
from .destabilize import (
    BatchEntry,
    DestabilizationReport,
    MinimalCurveChoice,
    batch_report,
    choose_minimal_curve,
    run_pipeline,
)
from .document import (
    SurfaceDocument,
    document_json,
    load_document,
    parse_document,
    serialize_document,
)
from .errors import (
    DimensionMismatchError,
    DocumentError,
    HypothesisViolationError,
    NefRayUnboundedError,
    PerturbationSearchError,
    PipelineContradictionError,
    SlopeUndefinedError,
    SurfaceValidationError,
    SyzstabError,
)
from .lattice import (
    DivisorClass,
    SurfaceData,
    SurfaceValidationReport,
    ValidationCheck,
    pair,
    signature,
    validate_surface,
)
from .slopes import (
    CoefficientComparison,
    LeadingTermCriterion,
    QuadraticPolynomial,
    SyzygyInvariants,
    ThresholdCriterion,
    closed_form_coefficients,
    leading_term_criterion,
    positivity_threshold,
    quadratic_expansion,
    slope_difference_numerator,
    syzygy_invariants,
    syzygy_slope,
    threshold_criterion,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BatchEntry",
    "BundleNumerics",
    "CatalogEntry",
    "CoefficientComparison",
    "ConeMembership",
    "DestabilizationReport",
    "DimensionMismatchError",
    "DivisorClass",
    "DocumentError",
    "HypothesisViolationError",
    "LeadingTermCriterion",
    "MinimalCurveChoice",
    "NefBoundaryResult",
    "NefRayUnboundedError",
    "PerturbationSearchError",
    "PipelineContradictionError",
    "QuadraticPolynomial",
    "Rational",
    "SlopeUndefinedError",
    "SurfaceData",
    "SurfaceDocument",
    "SurfaceValidationError",
    "SurfaceValidationReport",
    "SyzstabError",
    "SyzygyInvariants",
    "ThresholdCriterion",
    "VANISHING_ASSUMPTION",
    "ValidationCheck",
    "batch_report",
    "catalog_entry",
    "chi",
    "choose_minimal_curve",
    "closed_form_coefficients",
    "document_json",
    "h0_under_vanishing",
    "is_ample",
    "is_nef",
    "leading_term_criterion",
    "load_catalog",
    "load_document",
    "max_nef_parameter",
    "pair",
    "parse_document",
    "perturb_to_ample",
    "positivity_threshold",
    "quadratic_expansion",
    "rat_str",
    "rational",
    "run_pipeline",
    "serialize_document",
    "signature",
    "slope_denominator",
    "slope_difference_numerator",
    "syzygy_invariants",
    "syzygy_slope",
    "tensor_line",
    "threshold_criterion",
    "twist",
    "validate_surface",
]
