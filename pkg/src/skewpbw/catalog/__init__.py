"""Bundled ring documents.

>>> from skewpbw.catalog import catalog_names, load_catalog
>>> "quantum-plane" in catalog_names()
True
>>> load_catalog("quantum-plane").presentation.n
2
"""
from __future__ import annotations

from importlib import resources

__all__ = ["catalog_names", "catalog_text", "load_catalog"]


def _entries():
    return {f.name[:-5]: f for f in resources.files(__name__).iterdir() if f.name.endswith(".json")}


def catalog_names():
    return sorted(_entries())


def catalog_text(name):
    """Raw JSON text of a bundled document."""
    entries = _entries()
    if name not in entries:
        from ..errors import SchemaError
        raise SchemaError(f"no catalog entry {name!r} (known: {', '.join(sorted(entries))})")
    return entries[name].read_text(encoding="utf-8")


def load_catalog(name):
    from ..document import parse_document
    return parse_document(catalog_text(name))
