"""Slopes of syzygy bundles and the twist-parameter slope comparison.

For a globally generated bundle E on a polarized surface (X, A), the kernel
M_E of the evaluation map has rank h0(E) - r and first Chern class -c1(E),
so its A-slope is -(c1(E).A) / (h0(E) - r).  Comparing the slopes of
M_{E(d) (x) O(-S)} and M_{E(d)} reduces, after clearing the (positive)
denominators, to the sign of a numerator N(d) that is a polynomial of degree
at most 2 in the twist parameter d.

Two routes to that quadratic are kept deliberately separate:

* ``quadratic_expansion`` interpolates N at d = 0, 1, 2 from the direct
  definition-level computation (twist, tensor, section counts, pairings).
  This is the authoritative route for every verdict.
* ``closed_form_coefficients`` transcribes a closed-form coefficient display
  literally.  It is carried for traceability only: in some configurations it
  disagrees with the interpolated ground truth (the second Chern class
  contribution enters it with the opposite sign, which also shifts the
  leading coefficient by a factor tied to the rank), and every such
  disagreement is reported, never silently resolved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ._rational import Rational, rational
from .chern import (
    VANISHING_ASSUMPTION,
    BundleNumerics,
    slope_denominator,
    tensor_line,
    twist,
)
from .errors import SlopeUndefinedError
from .lattice import DivisorClass, SurfaceData, pair


def _sign(x: Rational) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class SyzygyInvariants:
    """Numerical invariants of the evaluation-map kernel M_E.

    ``rank_M`` is h0(E) - rank(E) under the vanishing assumption recorded in
    ``assumption_tag``; the slope of M_E is defined only when it is positive.
    """

    rank_M: Rational
    c1_M: DivisorClass
    source: BundleNumerics
    assumption_tag: str = VANISHING_ASSUMPTION


def syzygy_invariants(E: BundleNumerics, X: SurfaceData) -> SyzygyInvariants:
    return SyzygyInvariants(rank_M=slope_denominator(E, X), c1_M=-E.c1, source=E)


def syzygy_slope(E: BundleNumerics, A: DivisorClass, X: SurfaceData) -> Rational:
    """A-slope of M_E: -(c1(E).A) / (h0(E) - r), section count via chi.

    Raises ``SlopeUndefinedError`` when h0(E) - r <= 0: then the kernel has
    no positive rank in this numerical model and no slope to speak of.
    """
    inv = syzygy_invariants(E, X)
    if inv.rank_M <= 0:
        raise SlopeUndefinedError(f"bundle with c1 = {E.c1!r}", inv.rank_M)
    return pair(inv.c1_M, A, X) / inv.rank_M


def _twisted_pair(
    E: BundleNumerics, D: DivisorClass, S: DivisorClass, d: int, X: SurfaceData
) -> tuple[BundleNumerics, BundleNumerics]:
    twisted = twist(E, d, D, X)
    return twisted, tensor_line(twisted, -S, X)


def slope_difference_numerator(
    E: BundleNumerics,
    D: DivisorClass,
    S: DivisorClass,
    A: DivisorClass,
    d: int,
    X: SurfaceData,
    require_slopes_defined: bool = False,
) -> Rational:
    """Denominator-cleared slope difference at twist d, computed directly.

    N(d) = (c1(E(d)).A) * (h0(E(d) (x) O(-S)) - r)
         - (c1(E(d) (x) O(-S)).A) * (h0(E(d)) - r)

    composed from twist, tensor and section counts with no closed-form
    shortcut.  When both section-count denominators are positive, the sign
    of N(d) is the sign of mu_A(M_{E(d) (x) O(-S)}) - mu_A(M_{E(d)}).
    N itself never divides, so it is total; pass
    ``require_slopes_defined=True`` to instead raise ``SlopeUndefinedError``
    naming the offending bundle when a denominator is nonpositive.

    The standard setting twists by D = c1(E); any D is accepted and N stays
    a polynomial of degree at most 2 in d.
    """
    twisted, twisted_minus = _twisted_pair(E, D, S, d, X)
    den_twisted = slope_denominator(twisted, X)
    den_minus = slope_denominator(twisted_minus, X)
    if require_slopes_defined:
        if den_twisted <= 0:
            raise SlopeUndefinedError(f"twisted bundle at d={d}", den_twisted)
        if den_minus <= 0:
            raise SlopeUndefinedError(
                f"twisted bundle tensored down by S at d={d}", den_minus
            )
    return pair(twisted.c1, A, X) * den_minus - pair(twisted_minus.c1, A, X) * den_twisted


@dataclass(frozen=True)
class QuadraticPolynomial:
    """a2*d^2 + a1*d + a0 with exact rational coefficients."""

    a2: Rational
    a1: Rational
    a0: Rational

    def __post_init__(self):
        object.__setattr__(self, "a2", rational(self.a2))
        object.__setattr__(self, "a1", rational(self.a1))
        object.__setattr__(self, "a0", rational(self.a0))

    def value(self, d: int) -> Rational:
        return self.a2 * d * d + self.a1 * d + self.a0

    def is_zero(self) -> bool:
        return self.a2 == 0 and self.a1 == 0 and self.a0 == 0

    def __str__(self) -> str:
        return f"({self.a2})*d^2 + ({self.a1})*d + ({self.a0})"


def quadratic_expansion(
    E: BundleNumerics,
    D: DivisorClass,
    S: DivisorClass,
    A: DivisorClass,
    X: SurfaceData,
) -> QuadraticPolynomial:
    """The quadratic N(d), pinned by interpolating the direct computation.

    Lagrange interpolation through (0, N(0)), (1, N(1)), (2, N(2)).  This is
    the ground truth every verdict uses; the cubic terms of the defining
    products cancel identically, which the test suite re-checks by comparing
    N(d) against this polynomial far beyond d = 2.
    """
    n0 = slope_difference_numerator(E, D, S, A, 0, X)
    n1 = slope_difference_numerator(E, D, S, A, 1, X)
    n2 = slope_difference_numerator(E, D, S, A, 2, X)
    a2 = (n2 - 2 * n1 + n0) / 2
    a1 = n1 - n0 - a2
    return QuadraticPolynomial(a2=a2, a1=a1, a0=n0)


@dataclass(frozen=True)
class CoefficientComparison:
    """Closed-form coefficients next to the interpolated ground truth.

    ``closed_form`` transcribes the stated coefficient display verbatim
    (tag: "as-stated"); ``oracle`` is the interpolated quadratic.
    ``differences`` holds closed_form - oracle per coefficient.
    """

    closed_form: QuadraticPolynomial
    oracle: QuadraticPolynomial
    differences: tuple[Rational, Rational, Rational]
    matches: bool
    tag: str = "as-stated"


def closed_form_coefficients(
    E: BundleNumerics,
    D: DivisorClass,
    S: DivisorClass,
    A: DivisorClass,
    X: SurfaceData,
) -> CoefficientComparison:
    """Literal transcription of the closed-form coefficient display, with a
    coefficient-by-coefficient exact comparison against the interpolation.

    Note the transcribed constant term carries its chi term as
    r^2*(chi(O_X) - 1) with no (S.A) factor; the comparison report is how
    that (and the second-Chern-class sign) is surfaced.
    """
    r = E.rank
    d_sq = pair(D, D, X)
    s_a = pair(S, A, X)
    d_a = pair(D, A, X)
    d_s = pair(D, S, X)
    k_s = pair(X.canonical_class, S, X)
    s_sq = pair(S, S, X)
    d_k = pair(D, X.canonical_class, X)
    chi_o = rational(X.chi_structure_sheaf)

    lead = (2 * r - 1) * d_sq * s_a - 2 * d_a * d_s
    adjoint = (k_s + s_sq) * d_a - d_k * s_a

    a2 = rational(r * r, 2) * lead
    a1 = r * lead + rational(r * r, 2) * adjoint
    a0 = (
        rational(r, 2) * s_a * d_sq
        - d_a * d_s
        + rational(r, 2) * adjoint
        + r * r * (chi_o - 1)
        + r * E.c2 * s_a
    )
    closed = QuadraticPolynomial(a2=a2, a1=a1, a0=a0)
    oracle = quadratic_expansion(E, D, S, A, X)
    diffs = (closed.a2 - oracle.a2, closed.a1 - oracle.a1, closed.a0 - oracle.a0)
    return CoefficientComparison(
        closed_form=closed,
        oracle=oracle,
        differences=diffs,
        matches=all(x == 0 for x in diffs),
    )


@dataclass(frozen=True)
class LeadingTermCriterion:
    """Decision record for the large-d slope comparison.

    The instability verdict is asserted from the interpolated leading
    coefficient only; the stated condition's verdict rides along for
    traceability.  ``discrepancy`` flags the configurations where the stated
    condition promises instability but the ground-truth leading coefficient
    does not deliver it.
    """

    stated_condition_value: Rational
    stated_condition_sign: int
    oracle_a2: Rational
    oracle_a2_sign: int
    oracle_verdict_unstable_for_large_d: bool
    stated_verdict_unstable_for_large_d: bool
    discrepancy: bool
    assumption_tag: str = VANISHING_ASSUMPTION


def leading_term_criterion(
    E: BundleNumerics,
    D: DivisorClass,
    S: DivisorClass,
    A: DivisorClass,
    X: SurfaceData,
) -> LeadingTermCriterion:
    """Evaluate the stated condition (2r-1)(D^2)(S.A) - 2(D.A)(D.S) > 0 next
    to the interpolated leading coefficient, and record both verdicts."""
    r = E.rank
    stated = (2 * r - 1) * pair(D, D, X) * pair(S, A, X) - 2 * pair(D, A, X) * pair(
        D, S, X
    )
    oracle = quadratic_expansion(E, D, S, A, X)
    oracle_positive = oracle.a2 > 0
    stated_positive = stated > 0
    return LeadingTermCriterion(
        stated_condition_value=stated,
        stated_condition_sign=_sign(stated),
        oracle_a2=oracle.a2,
        oracle_a2_sign=_sign(oracle.a2),
        oracle_verdict_unstable_for_large_d=oracle_positive,
        stated_verdict_unstable_for_large_d=stated_positive,
        discrepancy=stated_positive and not oracle_positive,
    )


@dataclass(frozen=True)
class ThresholdCriterion:
    """Threshold record: from which integer twist on is N(d) strictly positive.

    ``d0`` is the least nonnegative integer with N(d) > 0 for every integer
    d >= d0, or ``None`` when the quadratic is eventually nonpositive
    (``no_threshold_reason`` says why).  ``stated_threshold`` is the literal
    -a1/a0 ratio of the closed-form coefficients ("as-stated"); it is never
    used for verdicts.
    """

    d0: Optional[int]
    no_threshold_reason: str
    stated_threshold: Optional[Rational]
    oracle: QuadraticPolynomial
    assumption_tag: str = VANISHING_ASSUMPTION

    @property
    def threshold_exists(self) -> bool:
        return self.d0 is not None


def _floor_larger_root(a2: Rational, a1: Rational, a0: Rational) -> Optional[int]:
    """Exact floor of the larger real root of a2*x^2 + a1*x + a0 (a2 > 0),
    or None when there is no real root.  Pure integer arithmetic."""
    scale = a2.denominator
    for c in (a1, a0):
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    A2 = int(a2 * scale)
    A1 = int(a1 * scale)
    A0 = int(a0 * scale)
    disc = A1 * A1 - 4 * A2 * A0
    if disc < 0:
        return None
    root = math.isqrt(disc)
    return (-A1 + root) // (2 * A2)


def positivity_threshold(quadratic: QuadraticPolynomial) -> tuple[Optional[int], str]:
    """Least nonnegative integer d0 with quadratic(d) > 0 for all integers
    d >= d0, or (None, reason) when no such integer exists.

    Exact root isolation locates the last sign change; a final walk-down
    handles quadratics whose root interval falls between consecutive
    integers, so the returned d0 really is minimal.
    """
    a2, a1, a0 = quadratic.a2, quadratic.a1, quadratic.a0
    if a2 < 0 or (a2 == 0 and a1 < 0):
        return None, "quadratic tends to -infinity"
    if a2 == 0 and a1 == 0:
        if a0 > 0:
            return 0, ""
        return None, f"constant value {a0} is not positive"
    if a2 > 0:
        floor_root = _floor_larger_root(a2, a1, a0)
        d0 = 0 if floor_root is None else max(0, floor_root + 1)
    else:
        d0 = max(0, math.floor(-a0 / a1) + 1)
    while d0 > 0 and quadratic.value(d0 - 1) > 0:
        d0 -= 1
    return d0, ""


def threshold_criterion(
    E: BundleNumerics,
    D: DivisorClass,
    S: DivisorClass,
    A: DivisorClass,
    X: SurfaceData,
) -> ThresholdCriterion:
    """Rigorous positivity threshold of N(d) plus the as-stated ratio."""
    comparison = closed_form_coefficients(E, D, S, A, X)
    oracle = comparison.oracle
    d0, reason = positivity_threshold(oracle)
    cf = comparison.closed_form
    stated = None if cf.a0 == 0 else -cf.a1 / cf.a0
    return ThresholdCriterion(
        d0=d0,
        no_threshold_reason=reason,
        stated_threshold=stated,
        oracle=oracle,
    )
