"""Command-line interface.

Subcommands: ``validate``, ``slope``, ``criterion``, ``destabilize``,
``batch``.  Human-readable results go to stdout; ``--json-out PATH`` writes
the machine-readable form with every rational as an exact string.  Exit
codes are a stable contract: 0 success, 1 validation/hypothesis failure,
2 parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from ._rational import parse_rational_token, rat_str
from .catalog import CATALOG_DIR_ENV, load_catalog
from .chern import VANISHING_ASSUMPTION, twist
from .destabilize import BatchEntry, DestabilizationReport, batch_report, run_pipeline
from .document import SurfaceDocument, load_document, parse_document
from .errors import DocumentError, SyzstabError
from .lattice import DivisorClass, SurfaceData, pair, validate_surface
from .slopes import (
    QuadraticPolynomial,
    closed_form_coefficients,
    leading_term_criterion,
    syzygy_slope,
    threshold_criterion,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2


def _parse_class(text: str, rho: int, what: str) -> DivisorClass:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != rho:
        raise DocumentError("<arg>", what, f"expected {rho} coordinates, got {len(parts)}")
    try:
        return DivisorClass(parse_rational_token(p) for p in parts)
    except ValueError as exc:
        raise DocumentError("<arg>", what, str(exc)) from None


def _class_wire(d: DivisorClass) -> list[str]:
    return [rat_str(c) for c in d.coords]


def _quad_wire(q: QuadraticPolynomial) -> dict:
    return {"a2": rat_str(q.a2), "a1": rat_str(q.a1), "a0": rat_str(q.a0)}


def _report_wire(report: DestabilizationReport) -> dict:
    return {
        "surface_name": report.surface_name,
        "chosen_index_j": report.chosen_index_j,
        "tie_indices": list(report.tie_indices),
        "s_class": _class_wire(report.s_class),
        "t0": rat_str(report.t0),
        "boundary_a": _class_wire(report.boundary_a),
        "vanishing_generator_indices": list(report.vanishing_generator_indices),
        "epsilon": rat_str(report.epsilon),
        "ample_a_prime": _class_wire(report.ample_a_prime),
        "chain_value": rat_str(report.chain_value),
        "chain_lower_bound": rat_str(report.chain_lower_bound),
        "strengthened_value": rat_str(report.strengthened_value),
        "quadratic": _quad_wire(report.quadratic),
        "d0": report.d0,
        "closed_form_matches": report.closed_form_matches,
        "justification": report.justification,
        "assumptions": list(report.assumptions),
    }


def _write_json(path: Optional[str], payload: dict) -> None:
    if path is None:
        return
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def _label(X: SurfaceData, d: DivisorClass) -> str:
    return f"{X.class_label(d)}  = ({', '.join(rat_str(c) for c in d.coords)})"


def _cmd_validate(args: argparse.Namespace) -> int:
    doc = parse_document(args.document)
    report = validate_surface(doc.surface)
    print(f"surface {report.surface_name!r}")
    for check in report.checks:
        print(f"  [{'pass' if check.passed else 'FAIL'}] {check.name}: {check.detail}")
    print(f"structural checks: {'pass' if report.structural_ok else 'FAIL'}")
    _write_json(
        args.json_out,
        {
            "command": "validate",
            "surface": report.surface_name,
            "structural_ok": report.structural_ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in report.checks
            ],
            "hypothesis_flags": {
                "picard_rank_at_least_3": report.picard_rank_at_least_3,
                "pairwise_intersections_at_most_1": report.pairwise_intersections_at_most_1,
                "generators_negative_self_intersection": report.generators_negative_self_intersection,
            },
        },
    )
    return EXIT_OK if report.structural_ok else EXIT_FAILURE


def _cmd_slope(args: argparse.Namespace) -> int:
    doc = load_document(args.document)
    X = doc.surface
    E = doc.bundle(args.bundle)
    A = _parse_class(args.polarization, X.picard_rank, "polarization")
    twisted = twist(E, args.twist, E.c1, X)
    mu = syzygy_slope(twisted, A, X)
    print(f"surface {X.name!r}, bundle {args.bundle!r}, twist d = {args.twist}")
    print(f"polarization A: {_label(X, A)}")
    print(f"slope of the syzygy bundle of the twisted bundle: {rat_str(mu)}")
    print(f"assumption: {VANISHING_ASSUMPTION}")
    _write_json(
        args.json_out,
        {
            "command": "slope",
            "surface": X.name,
            "bundle": args.bundle,
            "twist_d": args.twist,
            "polarization": _class_wire(A),
            "slope": rat_str(mu),
            "assumptions": [VANISHING_ASSUMPTION],
        },
    )
    return EXIT_OK


def _cmd_criterion(args: argparse.Namespace) -> int:
    doc = load_document(args.document)
    X = doc.surface
    E = doc.bundle(args.bundle)
    D = E.c1
    S = _parse_class(args.s_class, X.picard_rank, "s-class")
    A = _parse_class(args.polarization, X.picard_rank, "polarization")

    lead = leading_term_criterion(E, D, S, A, X)
    comparison = closed_form_coefficients(E, D, S, A, X)
    threshold = threshold_criterion(E, D, S, A, X)
    base_value = pair(D, D, X) * pair(S, A, X) - 2 * pair(D, A, X) * pair(D, S, X)

    print(f"surface {X.name!r}, bundle {args.bundle!r}")
    print(f"S: {_label(X, S)}")
    print(f"A: {_label(X, A)}")
    print(f"condition value (2r-1)(D^2)(S.A) - 2(D.A)(D.S) = {rat_str(lead.stated_condition_value)}")
    print(f"condition value      (D^2)(S.A) - 2(D.A)(D.S) = {rat_str(base_value)}")
    print("coefficients (closed-form | interpolated | difference):")
    for name, cf, orc, diff in [
        ("a2", comparison.closed_form.a2, comparison.oracle.a2, comparison.differences[0]),
        ("a1", comparison.closed_form.a1, comparison.oracle.a1, comparison.differences[1]),
        ("a0", comparison.closed_form.a0, comparison.oracle.a0, comparison.differences[2]),
    ]:
        print(f"  {name}: {rat_str(cf)} | {rat_str(orc)} | {rat_str(diff)}")
    verdict = (
        "slope comparison favours the twisted-down kernel for all large d"
        if lead.oracle_verdict_unstable_for_large_d
        else "no instability verdict from the leading coefficient"
    )
    print(f"verdict (interpolation, authoritative): {verdict}")
    if threshold.d0 is not None:
        print(f"threshold d0 = {threshold.d0}")
    else:
        print(f"threshold: none ({threshold.no_threshold_reason})")
    if lead.discrepancy:
        print("NOTE: closed-form condition is positive but the interpolated "
              "leading coefficient is not -- closed-form discrepancy case")
    if args.paper_mode:
        stated = (
            "claims instability for large d"
            if lead.stated_verdict_unstable_for_large_d
            else "claims nothing"
        )
        print(f"as-stated condition verdict (non-authoritative): {stated}")
        if threshold.stated_threshold is not None:
            print(
                "as-stated threshold -a1/a0 (non-authoritative): "
                f"{rat_str(threshold.stated_threshold)}"
            )
        else:
            print("as-stated threshold -a1/a0 (non-authoritative): undefined (a0 = 0)")
    print(f"assumption: {VANISHING_ASSUMPTION}")

    _write_json(
        args.json_out,
        {
            "command": "criterion",
            "surface": X.name,
            "bundle": args.bundle,
            "s_class": _class_wire(S),
            "polarization": _class_wire(A),
            "stated_condition_value": rat_str(lead.stated_condition_value),
            "base_condition_value": rat_str(base_value),
            "coefficients": {
                "closed_form": _quad_wire(comparison.closed_form),
                "oracle": _quad_wire(comparison.oracle),
                "differences": [rat_str(x) for x in comparison.differences],
                "matches": comparison.matches,
            },
            "oracle_verdict_unstable_for_large_d": lead.oracle_verdict_unstable_for_large_d,
            "stated_verdict_unstable_for_large_d": lead.stated_verdict_unstable_for_large_d,
            "discrepancy": lead.discrepancy,
            "d0": threshold.d0,
            "no_threshold_reason": threshold.no_threshold_reason,
            "stated_threshold": None
            if threshold.stated_threshold is None
            else rat_str(threshold.stated_threshold),
            "assumptions": [VANISHING_ASSUMPTION],
        },
    )
    return EXIT_OK


def _cmd_destabilize(args: argparse.Namespace) -> int:
    doc = load_document(args.document)
    X = doc.surface
    E = doc.bundle(args.bundle)
    report = run_pipeline(E, X)
    print(f"surface {X.name!r}, bundle {args.bundle!r}: destabilizing polarization found")
    print(f"chosen generator index j = {report.chosen_index_j} (ties: {list(report.tie_indices)})")
    print(f"S = C_j: {_label(X, report.s_class)}")
    print(f"t0 = {rat_str(report.t0)}")
    print(f"nef-boundary class A: {_label(X, report.boundary_a)}")
    print(f"boundary pairs to zero with generators {list(report.vanishing_generator_indices)}")
    print(f"epsilon = {rat_str(report.epsilon)}")
    print(f"ample polarization A': {_label(X, report.ample_a_prime)}")
    print(f"chain value (D^2)(S.A) - 2(D.A)(D.S) = {rat_str(report.chain_value)}"
          f" (lower bound {rat_str(report.chain_lower_bound)})")
    print(f"strengthened value at A' = {rat_str(report.strengthened_value)}")
    print(f"slope-difference quadratic at A': {report.quadratic}")
    print(f"instability threshold d0 = {report.d0}")
    if args.paper_mode:
        comparison = closed_form_coefficients(E, E.c1, report.s_class, report.ample_a_prime, X)
        print("as-stated closed-form coefficients (non-authoritative): "
              f"{comparison.closed_form}")
        print(f"closed-form matches interpolation: {comparison.matches}")
    print(f"justification: {report.justification}")
    for assumption in report.assumptions:
        print(f"assumption: {assumption}")
    payload = {"command": "destabilize", "bundle": args.bundle}
    payload.update(_report_wire(report))
    _write_json(args.json_out, payload)
    return EXIT_OK


def _entry_wire(entry: BatchEntry) -> dict:
    wire = {
        "surface": entry.surface_name,
        "bundle": entry.bundle_name,
        "status": entry.status,
        "detail": entry.detail,
    }
    if entry.report is not None:
        wire["report"] = _report_wire(entry.report)
    return wire


def _cmd_batch(args: argparse.Namespace) -> int:
    directory = Path(args.catalog_dir) if args.catalog_dir else None
    entries = load_catalog(directory)
    results: list[BatchEntry] = []
    for entry in entries:
        results.extend(batch_report([entry.surface], list(entry.bundles)))
    for result in results:
        status = result.status
        extra = f" ({result.detail})" if result.detail else ""
        if result.report is not None:
            extra = (
                f" (j={result.report.chosen_index_j}, t0={rat_str(result.report.t0)},"
                f" epsilon={rat_str(result.report.epsilon)}, d0={result.report.d0})"
            )
        print(f"{result.surface_name} / {result.bundle_name}: {status}{extra}")
    _write_json(
        args.json_out,
        {"command": "batch", "entries": [_entry_wire(r) for r in results]},
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syzstab",
        description="Exact-arithmetic instability checks for syzygy bundles "
        "on polarized surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="validate a surface document")
    p_validate.add_argument("document", help="path to a surface JSON document")
    p_validate.add_argument("--json-out", default=None, metavar="PATH")
    p_validate.set_defaults(func=_cmd_validate)

    p_slope = sub.add_parser("slope", help="slope of a twisted syzygy bundle")
    p_slope.add_argument("document")
    p_slope.add_argument("bundle", help="bundle name inside the document")
    p_slope.add_argument(
        "--polarization", required=True,
        help="comma-separated rational coordinates, e.g. 3,-3/2,-1",
    )
    p_slope.add_argument("--twist", type=int, default=0, metavar="D",
                         help="twist exponent d (default 0)")
    p_slope.add_argument("--json-out", default=None, metavar="PATH")
    p_slope.set_defaults(func=_cmd_slope)

    p_criterion = sub.add_parser(
        "criterion", help="slope-comparison criterion for a chosen S and A"
    )
    p_criterion.add_argument("document")
    p_criterion.add_argument("bundle")
    p_criterion.add_argument("--s-class", required=True,
                             help="comma-separated coordinates of the effective class S")
    p_criterion.add_argument("--polarization", required=True)
    p_criterion.add_argument("--paper-mode", action="store_true",
                             help="also print the non-authoritative verdicts of the "
                             "literal closed-form coefficient display")
    p_criterion.add_argument("--json-out", default=None, metavar="PATH")
    p_criterion.set_defaults(func=_cmd_criterion)

    p_dest = sub.add_parser(
        "destabilize", help="construct a destabilizing polarization"
    )
    p_dest.add_argument("document")
    p_dest.add_argument("bundle")
    p_dest.add_argument("--paper-mode", action="store_true",
                        help="also print the closed-form coefficients next to the report")
    p_dest.add_argument("--json-out", default=None, metavar="PATH")
    p_dest.set_defaults(func=_cmd_destabilize)

    p_batch = sub.add_parser("batch", help="run the pipeline over the catalog")
    p_batch.add_argument(
        "--catalog-dir", default=None,
        help=f"directory of surface documents (default: built-in catalog, "
        f"or ${CATALOG_DIR_ENV})",
    )
    p_batch.add_argument("--json-out", default=None, metavar="PATH")
    p_batch.set_defaults(func=_cmd_batch)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_FAILURE
    except SyzstabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
