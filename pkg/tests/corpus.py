"""Deterministic fuzz corpus shared by property and acceptance tests.

Inputs are drawn with a fixed seed from the built-in catalog: a surface, a
rank in 1..5, an integral first Chern class pushed into the ample cone by
adding the entry's ample reference class, a small integral second Chern
class (zero for line bundles, by the type invariant), one effective-cone
generator as S, and an ample polarization built the same way as c1.

The discrepancy ledger derived from this corpus is frozen in
``tests/fixtures/discrepancy_ledger.json``; regenerate it with

    python -c "import sys; sys.path.insert(0, 'tests'); import corpus; \
               corpus.write_ledger('tests/fixtures/discrepancy_ledger.json')"

whenever the corpus definition changes, and review the diff.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from syzstab import (
    BundleNumerics,
    CatalogEntry,
    DivisorClass,
    SurfaceData,
    closed_form_coefficients,
    is_ample,
    leading_term_criterion,
    load_catalog,
    rat_str,
    rational,
)

CORPUS_SEED = 487150
CORPUS_SIZE = 500


@dataclass(frozen=True)
class FuzzInput:
    index: int
    surface: SurfaceData
    bundle: BundleNumerics
    s_index: int  # 1-based generator index
    polarization: DivisorClass

    @property
    def s_class(self) -> DivisorClass:
        return self.surface.generator(self.s_index)


def make_ample(coords, ample_ref: DivisorClass, X: SurfaceData) -> DivisorClass:
    d = DivisorClass(coords)
    while not is_ample(d, X):
        d = d + ample_ref
    return d


def build_corpus(entries=None, size: int = CORPUS_SIZE, seed: int = CORPUS_SEED):
    if entries is None:
        entries = load_catalog()
    usable = [e for e in entries if e.ample_reference is not None]
    rng = random.Random(seed)
    corpus: list[FuzzInput] = []
    for index in range(size):
        entry = usable[rng.randrange(len(usable))]
        X = entry.surface
        rho = X.picard_rank
        r = rng.randrange(1, 6)
        c1 = make_ample(
            [rng.randrange(-3, 4) for _ in range(rho)], entry.ample_reference, X
        )
        c2 = rational(rng.randrange(-5, 11)) if r >= 2 else rational(0)
        s_index = rng.randrange(1, len(X.effective_cone_generators) + 1)
        polarization = make_ample(
            [rng.randrange(-3, 4) for _ in range(rho)], entry.ample_reference, X
        )
        corpus.append(
            FuzzInput(
                index=index,
                surface=X,
                bundle=BundleNumerics(rank=r, c1=c1, c2=c2),
                s_index=s_index,
                polarization=polarization,
            )
        )
    return corpus


def _class_wire(d: DivisorClass) -> list[str]:
    return [rat_str(c) for c in d.coords]


def build_discrepancy_ledger(entries=None, corpus=None) -> dict:
    """Every corpus case where the stated leading-term condition is positive
    but the interpolated leading coefficient is not, plus every S = 0
    coefficient mismatch over the catalog bundles (these appear exactly on
    surfaces with chi(O) != 1)."""
    if entries is None:
        entries = load_catalog()
    if corpus is None:
        corpus = build_corpus(entries)

    lead_cases = []
    for item in corpus:
        E, X = item.bundle, item.surface
        record = leading_term_criterion(E, E.c1, item.s_class, item.polarization, X)
        if record.discrepancy:
            lead_cases.append(
                {
                    "name": f"lead-sign-{item.index:04d}",
                    "surface": X.name,
                    "rank": E.rank,
                    "c1": _class_wire(E.c1),
                    "c2": rat_str(E.c2),
                    "s_index": item.s_index,
                    "polarization": _class_wire(item.polarization),
                    "stated_condition_value": rat_str(record.stated_condition_value),
                    "oracle_a2": rat_str(record.oracle_a2),
                }
            )

    s_zero_cases = []
    for entry in entries:
        X = entry.surface
        if entry.ample_reference is None:
            continue
        zero = DivisorClass([0] * X.picard_rank)
        for bundle_name, E in entry.bundles:
            comparison = closed_form_coefficients(
                E, E.c1, zero, entry.ample_reference, X
            )
            if not comparison.matches:
                s_zero_cases.append(
                    {
                        "name": f"s0-chi-{X.name}-{bundle_name}",
                        "surface": X.name,
                        "bundle": bundle_name,
                        "chi_structure_sheaf": X.chi_structure_sheaf,
                        "closed_form_a0": rat_str(comparison.closed_form.a0),
                        "oracle_a0": rat_str(comparison.oracle.a0),
                        "differences": [rat_str(x) for x in comparison.differences],
                    }
                )

    return {
        "seed": CORPUS_SEED,
        "size": len(corpus),
        "lead_sign_cases": lead_cases,
        "s_zero_chi_cases": s_zero_cases,
    }


def write_ledger(path: str) -> None:
    ledger = build_discrepancy_ledger()
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(
        json.dumps(ledger, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(
        f"wrote {path}: {len(ledger['lead_sign_cases'])} leading-sign cases, "
        f"{len(ledger['s_zero_chi_cases'])} S=0 chi cases"
    )
