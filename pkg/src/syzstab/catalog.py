"""Built-in surface catalog.

Entries live as JSON files in ``syzstab/data`` in exactly the format the CLI
accepts, so they double as format documentation.  Every entry is validated
at load time; ``expected_flags`` in the files are re-derived by the test
suite, never trusted.  Set ``SYZSTAB_CATALOG_DIR`` to load a different
directory of documents instead.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .chern import BundleNumerics
from .document import SurfaceDocument, load_document
from .lattice import DivisorClass, SurfaceData

CATALOG_DIR_ENV = "SYZSTAB_CATALOG_DIR"


@dataclass(frozen=True)
class CatalogEntry:
    """One validated catalog surface with its sample bundles."""

    document: SurfaceDocument

    @property
    def surface(self) -> SurfaceData:
        return self.document.surface

    @property
    def name(self) -> str:
        return self.document.surface.name

    @property
    def bundles(self) -> tuple[tuple[str, BundleNumerics], ...]:
        return self.document.bundles

    @property
    def ample_reference(self) -> Optional[DivisorClass]:
        return self.document.ample_reference

    @property
    def expected_flags(self) -> Optional[dict]:
        return self.document.expected_flags


def catalog_directory() -> Path:
    override = os.environ.get(CATALOG_DIR_ENV)
    if override:
        return Path(override)
    return Path(resources.files("syzstab") / "data")


def load_catalog(directory: Optional[Path] = None) -> tuple[CatalogEntry, ...]:
    """Load and validate every ``*.json`` document in the catalog directory.

    Entries come back sorted by file name, so the order (and everything
    derived from it, batch output included) is deterministic.
    """
    base = Path(directory) if directory is not None else catalog_directory()
    paths = sorted(base.glob("*.json"))
    if not paths:
        raise FileNotFoundError(f"no catalog documents (*.json) in {base}")
    return tuple(CatalogEntry(load_document(path)) for path in paths)


def catalog_entry(name: str, directory: Optional[Path] = None) -> CatalogEntry:
    entries = load_catalog(directory)
    for entry in entries:
        if entry.name == name:
            return entry
    known = ", ".join(e.name for e in entries)
    raise KeyError(f"no catalog surface named {name!r}; have: {known}")
