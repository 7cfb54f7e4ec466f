"""Named knots with their braid words and recorded invariants.

The bundled catalog lives in ``data/catalog.json``.  Set ``LASSOKNOTS_CATALOG``
to the path of another file with the same layout to replace it.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .braid import BraidWord
from .poly import LaurentPolynomial

__all__ = ["CatalogEntry", "CatalogError", "CATALOG_ENV", "load_catalog", "lookup", "resolve_knot", "self_check"]

CATALOG_ENV = "LASSOKNOTS_CATALOG"
SUPPORTED_VERSIONS = (1,)

# unicode subscripts are accepted in names: 3₁ -> 3_1
_SUBSCRIPTS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")
_SUBSCRIPT_RUN = re.compile(r"([₀-₉]+)")


class CatalogError(LookupError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    braid: BraidWord
    expected_alexander: LaurentPolynomial
    expected_jones: LaurentPolynomial

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "braid": str(self.braid),
            "alexander": self.expected_alexander.to_text(),
            "jones": self.expected_jones.to_text(),
        }


def _read_source(path: str | None) -> tuple[str, str]:
    path = path or os.environ.get(CATALOG_ENV)
    if path:
        return Path(path).read_text(encoding="utf-8"), path
    ref = resources.files("lassoknots").joinpath("data/catalog.json")
    return ref.read_text(encoding="utf-8"), "<bundled catalog>"


@lru_cache(maxsize=8)
def _load(path: str | None) -> dict[str, CatalogEntry]:
    text, origin = _read_source(path)
    data = json.loads(text)
    version = data.get("version")
    if version not in SUPPORTED_VERSIONS:
        raise CatalogError(f"{origin}: unsupported catalog version {version!r}")
    entries = {}
    for item in data["knots"]:
        entry = CatalogEntry(
            item["name"],
            BraidWord.parse(item["braid"]),
            LaurentPolynomial.parse(item["alexander"], "t"),
            LaurentPolynomial.parse(item["jones"], "u"),
        )
        entries[entry.name] = entry
    return entries


def load_catalog(path: str | None = None) -> dict[str, CatalogEntry]:
    """Entries keyed by name.  ``path`` overrides the environment variable."""
    return dict(_load(path or os.environ.get(CATALOG_ENV)))


def lookup(name: str) -> CatalogEntry:
    catalog = load_catalog()
    key = _SUBSCRIPT_RUN.sub(lambda m: "_" + m.group(1).translate(_SUBSCRIPTS), name.strip())
    if key not in catalog:
        raise CatalogError(f"unknown knot {name!r}; known: {', '.join(catalog)}")
    return catalog[key]


def resolve_knot(text: str) -> tuple[BraidWord, str]:
    """A catalog name or inline braid (``B3: 1 -2 1 -2``), with a display name."""
    text = text.strip()
    if text.upper().startswith("B") and ":" in text:
        beta = BraidWord.parse(text)
        return beta, str(beta)
    if text in ("U", "unknot", "0_1"):
        return BraidWord(1, ()), "U"
    entry = lookup(text)
    return entry.braid, entry.name


def self_check(catalog: dict[str, CatalogEntry] | None = None) -> list[tuple[str, bool, str]]:
    """Recompute every entry; one ``(label, ok, detail)`` per check."""
    from .alexander import alexander_closure
    from .braid import jones_closure

    results = []
    for entry in (catalog or load_catalog()).values():
        alex = alexander_closure(entry.braid)
        jones = jones_closure(entry.braid)
        results.append((f"catalog {entry.name} alexander", alex == entry.expected_alexander, alex.to_text()))
        results.append((f"catalog {entry.name} jones", jones == entry.expected_jones, jones.to_text()))
        ok = alex.is_symmetric() and alex.evaluate(1) == 1
        results.append((f"catalog {entry.name} normalization", ok, f"det {abs(alex.evaluate(-1))}"))
    return results
