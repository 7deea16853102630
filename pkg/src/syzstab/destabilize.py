"""Constructive search for a polarization that destabilizes syzygy bundles.

Given a surface whose effective cone is generated by finitely many curves
with mutual intersection numbers at most 1 and Picard rank at least 3, and a
bundle E whose determinant class D is ample, the pipeline picks the generator
C_j with minimal D . C_j, slides D to the nef boundary along C_j, perturbs
back into the ample cone by a small rational epsilon, and certifies that for
the resulting polarization A' the kernel bundle M_{E(d)} acquires a
destabilizing subbundle for every twist d beyond an explicit threshold.
Every inequality in that chain is recorded in the report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ._rational import Rational
from .chern import VANISHING_ASSUMPTION, BundleNumerics
from .cones import is_ample, max_nef_parameter, perturb_to_ample
from .errors import (
    HypothesisViolationError,
    PipelineContradictionError,
    SurfaceValidationError,
    SyzstabError,
)
from .lattice import DivisorClass, SurfaceData, pair, validate_surface
from .slopes import (
    QuadraticPolynomial,
    closed_form_coefficients,
    quadratic_expansion,
    threshold_criterion,
)

JUSTIFICATION = (
    "S is effective, so twisting down by S embeds the bundle E(d)(-S) into "
    "E(d); with both globally generated, the kernel of the evaluation map of "
    "the sub-bundle embeds into the kernel for E(d).  The slope comparison "
    "certifies that this sub-kernel has strictly larger A'-slope for every "
    "integer d >= d0, so it destabilizes M_{E(d)} and M_{E(d)} is not stable "
    "with respect to A'."
)


@dataclass(frozen=True)
class MinimalCurveChoice:
    """Generator minimizing D . C_i (1-based); ties listed, lowest index wins."""

    chosen_index: int
    tie_indices: tuple[int, ...]
    pairing_value: Rational


def choose_minimal_curve(D: DivisorClass, X: SurfaceData) -> MinimalCurveChoice:
    """Pick the effective-cone generator with minimal intersection against D."""
    values = [pair(D, C, X) for C in X.effective_cone_generators]
    best = min(values)
    ties = tuple(i for i, v in enumerate(values, start=1) if v == best)
    return MinimalCurveChoice(chosen_index=ties[0], tie_indices=ties, pairing_value=best)


@dataclass(frozen=True)
class DestabilizationReport:
    """Full evidence trail of one successful pipeline run.

    ``chain_value`` is (D^2)(S.A) - 2(D.A)(D.S) at the nef-boundary class A
    and ``chain_lower_bound`` is the weaker bound D^2*(t0 - D.C_j) it
    dominates; ``strengthened_value`` is the (2r-1)-weighted form at the
    ample perturbation A'.  Generator indices are 1-based.
    """

    surface_name: str
    chosen_index_j: int
    tie_indices: tuple[int, ...]
    s_class: DivisorClass
    t0: Rational
    boundary_a: DivisorClass
    vanishing_generator_indices: tuple[int, ...]
    epsilon: Rational
    ample_a_prime: DivisorClass
    chain_value: Rational
    chain_lower_bound: Rational
    strengthened_value: Rational
    quadratic: QuadraticPolynomial
    d0: int
    closed_form_matches: bool
    justification: str
    assumptions: tuple[str, ...]


def _check_hypotheses(E: BundleNumerics, X: SurfaceData) -> None:
    report = validate_surface(X)
    if not report.structural_ok:
        raise SurfaceValidationError(X.name, report.failed_structural_checks())
    if not report.picard_rank_at_least_3:
        raise HypothesisViolationError(
            "picard-rank>=3", f"surface {X.name!r} has Picard rank {X.picard_rank}"
        )
    if not report.pairwise_intersections_at_most_1:
        detail = next(
            c.detail
            for c in report.checks
            if c.name == "hypothesis-pairwise-intersections<=1"
        )
        raise HypothesisViolationError("pairwise-generator-intersections<=1", detail)
    amp = is_ample(E.c1, X)
    if not amp:
        raise HypothesisViolationError(
            "determinant-ample", f"c1 of the bundle is not ample: {amp.reason}"
        )


def run_pipeline(E: BundleNumerics, X: SurfaceData) -> DestabilizationReport:
    """Construct a destabilizing polarization for E on X, with evidence.

    Raises ``HypothesisViolationError`` (or ``SurfaceValidationError``) when
    the input does not satisfy the preconditions, and
    ``PipelineContradictionError`` if an inequality that must hold under
    valid hypotheses fails -- the latter means the surface data does not
    describe what it claims.
    """
    _check_hypotheses(E, X)
    D = E.c1
    r = E.rank

    choice = choose_minimal_curve(D, X)
    S = X.generator(choice.chosen_index)

    boundary = max_nef_parameter(D, S, X)
    t0 = boundary.t0
    A = D - t0 * S

    d_cj = choice.pairing_value
    if t0 < d_cj:
        raise PipelineContradictionError("t0 - D.C_j (must be >= 0)", t0 - d_cj)
    chain_lower_bound = pair(D, D, X) * (t0 - d_cj)
    chain_value = pair(D, D, X) * pair(S, A, X) - 2 * pair(D, A, X) * pair(D, S, X)
    if chain_value < 0:
        raise PipelineContradictionError("chain value (must be >= 0)", chain_value)

    def leading_coefficient_positive(candidate: DivisorClass) -> bool:
        return quadratic_expansion(E, D, S, candidate, X).a2 > 0

    a_prime, epsilon = perturb_to_ample(
        A, S, (r, D, S), X, extra_accept=leading_coefficient_positive
    )

    strengthened = (2 * r - 1) * pair(D, D, X) * pair(S, a_prime, X) - 2 * pair(
        D, a_prime, X
    ) * pair(D, S, X)
    if strengthened < 0:
        raise PipelineContradictionError("strengthened value (must be >= 0)", strengthened)

    comparison = closed_form_coefficients(E, D, S, a_prime, X)
    threshold = threshold_criterion(E, D, S, a_prime, X)
    if threshold.d0 is None:
        raise PipelineContradictionError(
            "positivity threshold (must exist)", threshold.no_threshold_reason
        )

    return DestabilizationReport(
        surface_name=X.name,
        chosen_index_j=choice.chosen_index,
        tie_indices=choice.tie_indices,
        s_class=S,
        t0=t0,
        boundary_a=A,
        vanishing_generator_indices=boundary.vanishing_generator_indices,
        epsilon=epsilon,
        ample_a_prime=a_prime,
        chain_value=chain_value,
        chain_lower_bound=chain_lower_bound,
        strengthened_value=strengthened,
        quadratic=comparison.oracle,
        d0=threshold.d0,
        closed_form_matches=comparison.matches,
        justification=JUSTIFICATION,
        assumptions=(
            f"{VANISHING_ASSUMPTION}, for every d >= d0",
            "E(d) and E(d) twisted down by S are globally generated for every "
            "d >= d0 (user-asserted, not verified here)",
        ),
    )


@dataclass(frozen=True)
class BatchEntry:
    """One (surface, bundle) outcome in a batch run."""

    surface_name: str
    bundle_name: str
    status: str  # "success" | "hypothesis-violation" | "validation-failure" | "error"
    report: Optional[DestabilizationReport]
    detail: str


def batch_report(
    surfaces: Sequence[SurfaceData],
    bundles: Sequence[tuple[str, BundleNumerics]],
) -> tuple[BatchEntry, ...]:
    """Run the pipeline over every (surface, bundle) combination.

    Nothing raises: every failure is captured in its entry, and the entry
    order is the deterministic input order.
    """
    entries: list[BatchEntry] = []
    for X in surfaces:
        for name, E in bundles:
            try:
                report = run_pipeline(E, X)
                entries.append(BatchEntry(X.name, name, "success", report, ""))
            except HypothesisViolationError as exc:
                entries.append(
                    BatchEntry(X.name, name, "hypothesis-violation", None, str(exc))
                )
            except SurfaceValidationError as exc:
                entries.append(
                    BatchEntry(X.name, name, "validation-failure", None, str(exc))
                )
            except SyzstabError as exc:
                entries.append(BatchEntry(X.name, name, "error", None, str(exc)))
    return tuple(entries)
