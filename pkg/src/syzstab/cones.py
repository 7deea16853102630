"""Nefness, ampleness and nef-boundary computations against a generator set.

All cone tests are duality tests against the supplied effective-cone
generators; their correctness is conditional on that list genuinely
generating the effective cone.  Generator indices in results are 1-based,
matching the C_1..C_m naming used throughout reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ._rational import Rational, rational
from .errors import NefRayUnboundedError, PerturbationSearchError
from .lattice import DivisorClass, SurfaceData, pair

EPSILON_SMALLEST = rational(1, 2**32)


@dataclass(frozen=True)
class ConeMembership:
    """Outcome of a nef/ample test, with a witness when it fails.

    ``witness_index`` is the 1-based index of a generator with a violating
    pairing, or ``None`` when the failure is the self-intersection test (or
    when the test passed).  ``witness_value`` carries the offending number.
    """

    ok: bool
    witness_index: Optional[int] = None
    witness_value: Optional[Rational] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_nef(D: DivisorClass, X: SurfaceData) -> ConeMembership:
    """True iff D pairs nonnegatively with every effective-cone generator."""
    for i, C in enumerate(X.effective_cone_generators, start=1):
        v = pair(D, C, X)
        if v < 0:
            return ConeMembership(False, i, v, f"D . C_{i} = {v} < 0")
    return ConeMembership(True)


def is_ample(D: DivisorClass, X: SurfaceData) -> ConeMembership:
    """True iff D^2 > 0 and D pairs strictly positively with every generator."""
    self_int = pair(D, D, X)
    if self_int <= 0:
        return ConeMembership(False, None, self_int, f"D^2 = {self_int} <= 0")
    for i, C in enumerate(X.effective_cone_generators, start=1):
        v = pair(D, C, X)
        if v <= 0:
            return ConeMembership(False, i, v, f"D . C_{i} = {v} <= 0")
    return ConeMembership(True)


@dataclass(frozen=True)
class NefBoundaryResult:
    """The largest t with D - t*Cj nef, and which generators cut it off.

    ``vanishing_generator_indices`` lists every 1-based i with
    (D - t0*Cj) . C_i = 0; it is nonempty exactly because D - t0*Cj sits on
    the nef-cone boundary.
    """

    t0: Rational
    vanishing_generator_indices: tuple[int, ...]


def max_nef_parameter(D: DivisorClass, Cj: DivisorClass, X: SurfaceData) -> NefBoundaryResult:
    """Largest t such that D - t*Cj stays nef, for ample D.

    Only generators with Cj . C_i > 0 bound the ray (for the others the
    pairing of D - t*Cj can only grow), so t0 is the minimum of
    (D . C_i) / (Cj . C_i) over the generators with Cj . C_i > 0.  If no
    generator pairs positively with Cj the ray never leaves the nef cone,
    which contradicts the geometry assumed here: that raises
    ``NefRayUnboundedError``.
    """
    amp = is_ample(D, X)
    if not amp:
        raise ValueError(f"max_nef_parameter needs ample D: {amp.reason}")
    gens = X.effective_cone_generators
    t0: Optional[Rational] = None
    for C in gens:
        denom = pair(Cj, C, X)
        if denom > 0:
            candidate = pair(D, C, X) / denom
            if t0 is None or candidate < t0:
                t0 = candidate
    if t0 is None:
        j = next(
            (i for i, g in enumerate(gens, start=1) if g == Cj),
            0,
        )
        raise NefRayUnboundedError(j)
    boundary = D - t0 * Cj
    vanishing = tuple(
        i for i, C in enumerate(gens, start=1) if pair(boundary, C, X) == 0
    )
    return NefBoundaryResult(t0=t0, vanishing_generator_indices=vanishing)


def perturb_to_ample(
    A: DivisorClass,
    Cj: DivisorClass,
    constraint: tuple[int, DivisorClass, DivisorClass],
    X: SurfaceData,
    extra_accept: Optional[Callable[[DivisorClass], bool]] = None,
) -> tuple[DivisorClass, Rational]:
    """Push a nef-boundary class back into the ample cone along Cj.

    Tries epsilon = 1/2, 1/4, ... down to 2^-32 and returns the first
    A' = A + epsilon*Cj that (i) is ample and (ii) keeps the transported
    slope-comparison condition
    (2r-1)(D^2)(S.A') - 2(D.A')(D.S) >= 0 for ``constraint`` = (r, D, S).
    ``extra_accept`` lets a caller demand more of A' (the destabilization
    pipeline requires the interpolated leading coefficient to be positive);
    it is ANDed with the two standard conditions.

    The halving sequence is fixed so results are reproducible; exhaustion
    raises ``PerturbationSearchError`` with the last attempt's failure.
    """
    r, D, S = constraint
    d_sq = pair(D, D, X)
    d_s = pair(D, S, X)
    eps = rational(1, 2)
    last_failure = "nothing tried"
    while eps >= EPSILON_SMALLEST:
        candidate = A + eps * Cj
        amp = is_ample(candidate, X)
        if not amp:
            last_failure = f"not ample at epsilon={eps}: {amp.reason}"
        else:
            transported = (2 * r - 1) * d_sq * pair(S, candidate, X) - 2 * pair(
                D, candidate, X
            ) * d_s
            if transported < 0:
                last_failure = (
                    f"transported condition negative at epsilon={eps}: {transported}"
                )
            elif extra_accept is not None and not extra_accept(candidate):
                last_failure = f"extra acceptance predicate rejected epsilon={eps}"
            else:
                return candidate, eps
        eps = eps / 2
    raise PerturbationSearchError(2 * eps, last_failure)
