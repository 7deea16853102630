"""Divisor classes on a surface and the intersection pairing.

A surface is described by a fixed basis of its divisor-class lattice: an
integer intersection matrix, the canonical class, chi of the structure sheaf
and a finite list of curve classes generating the effective cone.  Divisor
classes are coordinate vectors of exact rationals in that basis, so the
intersection pairing is a matrix product.  Everything here is a pure function
on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from ._rational import Rational, rational
from .errors import DimensionMismatchError


@dataclass(frozen=True)
class DivisorClass:
    """A divisor class as a vector of exact rationals in the surface basis."""

    coords: tuple[Rational, ...]

    def __init__(self, coords: Iterable[Union[int, str, Rational]]):
        object.__setattr__(self, "coords", tuple(rational(c) for c in coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(other) != len(self):
            raise DimensionMismatchError("divisor class sum", len(self), len(other))
        return DivisorClass(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-a for a in self.coords)

    def __rmul__(self, scalar: Union[int, str, Rational]) -> "DivisorClass":
        s = rational(scalar)
        return DivisorClass(s * a for a in self.coords)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def __repr__(self) -> str:
        return f"DivisorClass(({', '.join(str(c) for c in self.coords)}))"


@dataclass(frozen=True)
class SurfaceData:
    """A surface's lattice data in a fixed basis.

    ``intersection_matrix`` is the integer Gram matrix of the basis;
    ``effective_cone_generators`` are the curve classes C_1..C_m that the
    caller asserts generate the effective cone.  ``basis_labels`` is optional
    and only used for pretty-printing.
    """

    name: str
    picard_rank: int
    intersection_matrix: tuple[tuple[int, ...], ...]
    canonical_class: DivisorClass
    chi_structure_sheaf: int
    effective_cone_generators: tuple[DivisorClass, ...]
    basis_labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(
            self,
            "intersection_matrix",
            tuple(tuple(int(x) for x in row) for row in self.intersection_matrix),
        )
        object.__setattr__(
            self, "effective_cone_generators", tuple(self.effective_cone_generators)
        )
        if not self.basis_labels:
            object.__setattr__(
                self, "basis_labels", tuple(f"e{i}" for i in range(self.picard_rank))
            )

    def pair(self, a: DivisorClass, b: DivisorClass) -> Rational:
        return pair(a, b, self)

    def generator(self, index: int) -> DivisorClass:
        """Generator by 1-based index, as used in every report."""
        return self.effective_cone_generators[index - 1]

    def class_label(self, d: DivisorClass) -> str:
        """Human-readable form like ``3L - 2E1 - E2`` in the surface basis."""
        parts: list[str] = []
        for c, lab in zip(d.coords, self.basis_labels):
            if c == 0:
                continue
            mag = c if c > 0 else -c
            term = lab if mag == 1 else f"{mag}{lab}"
            parts.append(("+ " if c > 0 else "- ") + term if parts else
                         (term if c > 0 else f"-{term}"))
        return " ".join(parts) if parts else "0"


def pair(a: DivisorClass, b: DivisorClass, X: SurfaceData) -> Rational:
    """Intersection number a . b, i.e. the bilinear form of ``X``'s matrix.

    Raises ``DimensionMismatchError`` naming the offending class when a
    coordinate vector does not match the surface's Picard rank.
    """
    rho = X.picard_rank
    if len(a) != rho:
        raise DimensionMismatchError(f"left class {a!r} on surface {X.name!r}", rho, len(a))
    if len(b) != rho:
        raise DimensionMismatchError(f"right class {b!r} on surface {X.name!r}", rho, len(b))
    M = X.intersection_matrix
    total = rational(0)
    for i, ai in enumerate(a.coords):
        if ai == 0:
            continue
        row = M[i]
        acc = rational(0)
        for j, bj in enumerate(b.coords):
            if bj == 0 or row[j] == 0:
                continue
            acc += row[j] * bj
        total += ai * acc
    return total


def _det_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(matrix)
    m = [[int(x) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _char_poly(matrix: Sequence[Sequence[int]]) -> list[Rational]:
    """Coefficients of det(xI - M), highest degree first (Faddeev-LeVerrier)."""
    n = len(matrix)
    a = [[rational(x) for x in row] for row in matrix]
    coeffs: list[Rational] = [rational(1)]
    mk = [[rational(1) if i == j else rational(0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = [
            [sum((a[i][t] * mk[t][j] for t in range(n)), rational(0)) for j in range(n)]
            for i in range(n)
        ]
        trace = sum((am[i][i] for i in range(n)), rational(0))
        c = -trace / k
        coeffs.append(c)
        mk = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


def _sign_variations(values: Iterable[Rational]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def signature(matrix: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Exact (positive, negative) eigenvalue counts of a nondegenerate
    symmetric integer matrix.

    All roots of the characteristic polynomial are real and nonzero here, so
    Descartes' rule of signs is exact on it.
    """
    coeffs = _char_poly(matrix)
    n_pos = _sign_variations(coeffs)
    n_neg = _sign_variations(c if i % 2 == 0 else -c for i, c in enumerate(coeffs))
    return n_pos, n_neg


@dataclass(frozen=True)
class ValidationCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class SurfaceValidationReport:
    """Outcome of every structural check plus the pipeline hypothesis flags.

    ``structural_ok`` collects the checks that make the lattice data
    well-formed.  The three hypothesis flags describe whether the surface
    qualifies for the destabilizing-polarization pipeline; failing them is a
    property of the surface, not a data error.  Negative self-intersection of
    all generators is reported as a warning-level flag only: no computation
    here requires it.
    """

    surface_name: str
    checks: tuple[ValidationCheck, ...]
    structural_ok: bool
    picard_rank_at_least_3: bool
    pairwise_intersections_at_most_1: bool
    generators_negative_self_intersection: bool

    def failed_structural_checks(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


def validate_surface(X: SurfaceData) -> SurfaceValidationReport:
    """Run all structural checks and derive the pipeline hypothesis flags.

    Never raises: every finding, pass or fail, lands in the report.
    """
    checks: list[ValidationCheck] = []
    rho = X.picard_rank
    M = X.intersection_matrix

    shape_ok = rho >= 1 and len(M) == rho and all(len(row) == rho for row in M)
    checks.append(
        ValidationCheck(
            "matrix-shape",
            shape_ok,
            f"intersection matrix is {len(M)}x{{{','.join(str(len(r)) for r in M)}}} "
            f"for picard_rank {rho}",
        )
    )
    lengths_ok = shape_ok and len(X.canonical_class) == rho and all(
        len(g) == rho for g in X.effective_cone_generators
    )
    checks.append(
        ValidationCheck(
            "class-lengths",
            lengths_ok,
            "canonical class and every generator match the Picard rank"
            if lengths_ok
            else "some class has the wrong number of coordinates",
        )
    )
    if not (shape_ok and lengths_ok):
        return SurfaceValidationReport(
            X.name, tuple(checks), False, False, False, False
        )

    symmetric = all(M[i][j] == M[j][i] for i in range(rho) for j in range(rho))
    checks.append(
        ValidationCheck(
            "symmetric",
            symmetric,
            "intersection matrix is symmetric"
            if symmetric
            else "intersection matrix has an asymmetric entry",
        )
    )

    det = _det_bareiss(M) if symmetric else 0
    nondegenerate = det != 0
    checks.append(
        ValidationCheck(
            "nondegenerate",
            nondegenerate,
            f"det = {det}" if symmetric else "skipped (matrix not symmetric)",
        )
    )

    if symmetric and nondegenerate:
        n_pos, n_neg = signature(M)
        sig_ok = n_pos == 1 and n_neg == rho - 1
        detail = f"signature ({n_pos}, {n_neg}), want (1, {rho - 1})"
    else:
        sig_ok, detail = False, "skipped (matrix degenerate or not symmetric)"
    checks.append(ValidationCheck("signature-(1,rho-1)", sig_ok, detail))

    gens = X.effective_cone_generators
    nonempty = len(gens) > 0
    checks.append(
        ValidationCheck(
            "generators-nonempty", nonempty, f"{len(gens)} effective-cone generators"
        )
    )
    nonzero = nonempty and all(not g.is_zero() for g in gens)
    checks.append(
        ValidationCheck(
            "generators-nonzero",
            nonzero,
            "all generators nonzero" if nonzero else "a generator is the zero class",
        )
    )

    structural = symmetric and nondegenerate and sig_ok and nonzero

    rho3 = rho >= 3
    checks.append(ValidationCheck("hypothesis-picard-rank>=3", rho3, f"rho = {rho}"))

    pairwise_ok = True
    worst = ""
    if structural:
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                v = pair(gens[i], gens[j], X)
                if v > 1:
                    pairwise_ok = False
                    worst = f"C_{i + 1} . C_{j + 1} = {v}"
                    break
            if not pairwise_ok:
                break
    else:
        pairwise_ok = False
        worst = "skipped (structural failure)"
    checks.append(
        ValidationCheck(
            "hypothesis-pairwise-intersections<=1",
            pairwise_ok,
            worst or "all mutual intersection numbers are at most 1",
        )
    )

    if structural:
        neg_self = all(pair(g, g, X) < 0 for g in gens)
        neg_detail = (
            "all generators have negative self-intersection"
            if neg_self
            else "a generator has nonnegative self-intersection (warning only; "
            "no computation here requires negativity)"
        )
    else:
        neg_self, neg_detail = False, "skipped (structural failure)"
    checks.append(
        ValidationCheck("warning-generators-negative-self-intersection", neg_self, neg_detail)
    )

    return SurfaceValidationReport(
        surface_name=X.name,
        checks=tuple(checks),
        structural_ok=structural,
        picard_rank_at_least_3=rho3,
        pairwise_intersections_at_most_1=pairwise_ok,
        generators_negative_self_intersection=neg_self,
    )
