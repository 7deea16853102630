"""Parsing and serialization of surface documents.

A surface document is a JSON file describing one surface and its bundles of
interest.  All rationals on the wire are integers or ``"p/q"`` strings and
the parse is exact; any float anywhere in the document is an error.  The
same format is used by the CLI and by the built-in catalog, so the catalog
files double as format documentation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Union

from ._rational import is_integral, parse_rational_token, rat_str
from .chern import BundleNumerics
from .errors import DocumentError, SurfaceValidationError
from .lattice import DivisorClass, SurfaceData, validate_surface

_REQUIRED_KEYS = {
    "name",
    "picard_rank",
    "intersection_matrix",
    "canonical_class",
    "chi_structure_sheaf",
    "effective_cone_generators",
    "bundles",
}
_OPTIONAL_KEYS = {"description", "basis_labels", "ample_reference", "expected_flags"}


@dataclass(frozen=True)
class SurfaceDocument:
    """One parsed surface file: the surface, its named bundles, and extras."""

    surface: SurfaceData
    bundles: tuple[tuple[str, BundleNumerics], ...]
    description: str = ""
    ample_reference: Optional[DivisorClass] = None
    expected_flags: Optional[dict] = field(default=None, hash=False)

    def bundle(self, name: str) -> BundleNumerics:
        for bundle_name, bundle in self.bundles:
            if bundle_name == name:
                return bundle
        known = ", ".join(n for n, _ in self.bundles)
        raise KeyError(f"no bundle named {name!r}; document has: {known}")


def _want_int(raw: Any, path: str, key: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise DocumentError(path, key, f"expected an integer, got {raw!r}")
    return raw


def _want_rational(raw: Any, path: str, key: str):
    if isinstance(raw, float):
        raise DocumentError(path, key, f"floats are not exact: {raw!r}")
    try:
        return parse_rational_token(raw)
    except ValueError as exc:
        raise DocumentError(path, key, str(exc)) from None


def _want_class(raw: Any, rho: int, path: str, key: str) -> DivisorClass:
    if not isinstance(raw, list):
        raise DocumentError(path, key, f"expected an array of rationals, got {raw!r}")
    if len(raw) != rho:
        raise DocumentError(
            path, key, f"expected {rho} coordinates, got {len(raw)}"
        )
    return DivisorClass(
        _want_rational(entry, path, f"{key}[{i}]") for i, entry in enumerate(raw)
    )


def parse_document(source: Union[str, Path, dict]) -> SurfaceDocument:
    """Parse a surface document from a path or an already-decoded dict.

    Checks syntax and shape only; run ``validate_surface`` (or use
    ``load_document``) for the structural lattice checks.
    """
    if isinstance(source, dict):
        path, data = "<dict>", source
    else:
        path = str(source)
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise DocumentError(path, "<file>", str(exc)) from None
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(
                path, "<json>", f"line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from None
    if not isinstance(data, dict):
        raise DocumentError(path, "<root>", "document root must be an object")

    unknown = set(data) - _REQUIRED_KEYS - _OPTIONAL_KEYS
    if unknown:
        raise DocumentError(path, sorted(unknown)[0], "unknown key")
    missing = _REQUIRED_KEYS - set(data)
    if missing:
        raise DocumentError(path, sorted(missing)[0], "required key missing")

    name = data["name"]
    if not isinstance(name, str) or not name:
        raise DocumentError(path, "name", f"expected a nonempty string, got {name!r}")
    rho = _want_int(data["picard_rank"], path, "picard_rank")
    if rho < 1:
        raise DocumentError(path, "picard_rank", f"must be positive, got {rho}")

    raw_matrix = data["intersection_matrix"]
    if not isinstance(raw_matrix, list) or len(raw_matrix) != rho:
        raise DocumentError(
            path, "intersection_matrix", f"expected {rho} rows of {rho} integers"
        )
    matrix = []
    for i, row in enumerate(raw_matrix):
        if not isinstance(row, list) or len(row) != rho:
            raise DocumentError(
                path, f"intersection_matrix[{i}]", f"expected a row of {rho} integers"
            )
        matrix.append(
            tuple(
                _want_int(x, path, f"intersection_matrix[{i}][{j}]")
                for j, x in enumerate(row)
            )
        )

    canonical = _want_class(data["canonical_class"], rho, path, "canonical_class")
    chi_o = _want_int(data["chi_structure_sheaf"], path, "chi_structure_sheaf")

    raw_gens = data["effective_cone_generators"]
    if not isinstance(raw_gens, list) or not raw_gens:
        raise DocumentError(
            path, "effective_cone_generators", "expected a nonempty array of classes"
        )
    generators = tuple(
        _want_class(g, rho, path, f"effective_cone_generators[{i}]")
        for i, g in enumerate(raw_gens)
    )

    labels: tuple[str, ...] = ()
    if "basis_labels" in data:
        raw_labels = data["basis_labels"]
        if (
            not isinstance(raw_labels, list)
            or len(raw_labels) != rho
            or not all(isinstance(x, str) for x in raw_labels)
        ):
            raise DocumentError(path, "basis_labels", f"expected {rho} strings")
        labels = tuple(raw_labels)

    surface = SurfaceData(
        name=name,
        picard_rank=rho,
        intersection_matrix=tuple(matrix),
        canonical_class=canonical,
        chi_structure_sheaf=chi_o,
        effective_cone_generators=generators,
        basis_labels=labels,
    )

    raw_bundles = data["bundles"]
    if not isinstance(raw_bundles, list):
        raise DocumentError(path, "bundles", "expected an array of bundle objects")
    bundles: list[tuple[str, BundleNumerics]] = []
    seen: set[str] = set()
    for i, raw in enumerate(raw_bundles):
        key = f"bundles[{i}]"
        if not isinstance(raw, dict) or set(raw) != {"name", "rank", "c1", "c2"}:
            raise DocumentError(
                path, key, "expected an object with keys name, rank, c1, c2"
            )
        bname = raw["name"]
        if not isinstance(bname, str) or not bname:
            raise DocumentError(path, f"{key}.name", f"expected a string, got {bname!r}")
        if bname in seen:
            raise DocumentError(path, f"{key}.name", f"duplicate bundle name {bname!r}")
        seen.add(bname)
        rank = _want_int(raw["rank"], path, f"{key}.rank")
        c1 = _want_class(raw["c1"], rho, path, f"{key}.c1")
        c2 = _want_rational(raw["c2"], path, f"{key}.c2")
        try:
            bundles.append((bname, BundleNumerics(rank=rank, c1=c1, c2=c2)))
        except ValueError as exc:
            raise DocumentError(path, key, str(exc)) from None

    ample_reference = None
    if "ample_reference" in data:
        ample_reference = _want_class(data["ample_reference"], rho, path, "ample_reference")

    description = data.get("description", "")
    if not isinstance(description, str):
        raise DocumentError(path, "description", "expected a string")

    expected_flags = data.get("expected_flags")
    if expected_flags is not None and not isinstance(expected_flags, dict):
        raise DocumentError(path, "expected_flags", "expected an object")

    return SurfaceDocument(
        surface=surface,
        bundles=tuple(bundles),
        description=description,
        ample_reference=ample_reference,
        expected_flags=expected_flags,
    )


def load_document(source: Union[str, Path, dict]) -> SurfaceDocument:
    """Parse a document and enforce the structural lattice checks.

    The signature test (and the other structural checks) is mandatory on
    every load path so bad data fails before any cone computation runs.
    """
    doc = parse_document(source)
    report = validate_surface(doc.surface)
    if not report.structural_ok:
        raise SurfaceValidationError(
            doc.surface.name, report.failed_structural_checks()
        )
    return doc


def _wire_rational(value) -> Union[int, str]:
    return int(value) if is_integral(value) else rat_str(value)


def _wire_class(d: DivisorClass) -> list:
    return [_wire_rational(c) for c in d.coords]


def serialize_document(doc: SurfaceDocument) -> dict:
    """Wire form of a document; parse(serialize(doc)) == doc exactly."""
    surface = doc.surface
    data: dict[str, Any] = {
        "name": surface.name,
        "picard_rank": surface.picard_rank,
        "intersection_matrix": [list(row) for row in surface.intersection_matrix],
        "canonical_class": _wire_class(surface.canonical_class),
        "chi_structure_sheaf": surface.chi_structure_sheaf,
        "effective_cone_generators": [
            _wire_class(g) for g in surface.effective_cone_generators
        ],
        "bundles": [
            {
                "name": name,
                "rank": bundle.rank,
                "c1": _wire_class(bundle.c1),
                "c2": _wire_rational(bundle.c2),
            }
            for name, bundle in doc.bundles
        ],
    }
    data["basis_labels"] = list(surface.basis_labels)
    if doc.description:
        data["description"] = doc.description
    if doc.ample_reference is not None:
        data["ample_reference"] = _wire_class(doc.ample_reference)
    if doc.expected_flags is not None:
        data["expected_flags"] = doc.expected_flags
    return data


def document_json(doc: SurfaceDocument) -> str:
    return json.dumps(serialize_document(doc), indent=2, sort_keys=True) + "\n"
