"""Chern-class bookkeeping for twists and line-bundle tensors, and the Euler
characteristic of a bundle on a surface.

Only the numerical shadow of a bundle is tracked: (rank, c1, c2).  Sections
are counted through chi under the explicit assumption that the higher
cohomology vanishes; that assumption is never verified here, only propagated
as a tag on every downstream report.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from ._rational import Rational, rational
from .lattice import DivisorClass, SurfaceData, pair

VANISHING_ASSUMPTION = "assumes h^1 = h^2 = 0 for the bundle whose sections are counted"


@dataclass(frozen=True)
class BundleNumerics:
    """Numerical invariants (rank, c1, c2) of a vector bundle."""

    rank: int
    c1: DivisorClass
    c2: Rational

    def __post_init__(self):
        object.__setattr__(self, "c2", rational(self.c2))
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if self.rank == 1 and self.c2 != 0:
            raise ValueError(f"a line bundle has c2 = 0, got {self.c2}")


def _pairs(r: int) -> int:
    return r * (r - 1) // 2


def twist(E: BundleNumerics, d: int, D: DivisorClass, X: SurfaceData) -> BundleNumerics:
    """Tensor E by the d-th power of the line bundle with class D.

    New invariants: (r, c1 + r*d*D, c2 + (r-1)*d*(c1.D) + C(r,2)*d^2*(D.D)).
    When D = c1(E) the twisted first Chern class is (r*d + 1) * D.
    """
    if d < 0:
        raise ValueError(f"twist exponent must be >= 0, got {d} (use tensor_line for inverses)")
    r = E.rank
    c1 = E.c1 + (r * d) * D
    c2 = E.c2 + (r - 1) * d * pair(E.c1, D, X) + _pairs(r) * d * d * pair(D, D, X)
    return BundleNumerics(r, c1, c2)


def tensor_line(E: BundleNumerics, T: DivisorClass, X: SurfaceData) -> BundleNumerics:
    """Tensor E by the line bundle with class T (T may be any class)."""
    r = E.rank
    c1 = E.c1 + r * T
    c2 = E.c2 + (r - 1) * pair(E.c1, T, X) + _pairs(r) * pair(T, T, X)
    return BundleNumerics(r, c1, c2)


def chi(E: BundleNumerics, X: SurfaceData) -> Rational:
    """Euler characteristic: r*chi(O_X) + c1.(c1 - K)/2 - c2.

    A non-integer result with integral inputs signals inconsistent surface
    data; it is reported as a warning, never an error, so the algebra stays
    total on rational test inputs.
    """
    value = (
        E.rank * rational(X.chi_structure_sheaf)
        + pair(E.c1, E.c1 - X.canonical_class, X) / 2
        - E.c2
    )
    if E.c1.is_integral() and E.c2.denominator == 1 and value.denominator != 1:
        warnings.warn(
            f"chi({X.name}) = {value} is not an integer for integral input; "
            "check the intersection matrix and canonical class",
            stacklevel=2,
        )
    return value


def h0_under_vanishing(E: BundleNumerics, X: SurfaceData) -> Rational:
    """Section count valid in the regime where h^1 = h^2 = 0, i.e. chi(E).

    Callers must surface ``VANISHING_ASSUMPTION`` in any report built on this.
    """
    return chi(E, X)


def slope_denominator(E: BundleNumerics, X: SurfaceData) -> Rational:
    """h0(E) - rank(E) under the vanishing assumption: the rank of the kernel
    of the evaluation map when E is globally generated."""
    return h0_under_vanishing(E, X) - E.rank
