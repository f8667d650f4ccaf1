"""Language frontends and extension-based dispatch."""

from __future__ import annotations

from pathlib import Path
from typing import Callable

from cpg.errors import UnsupportedLanguageError
from cpg.frontends import c, generic
from cpg.frontends.base import CoverageRecord, TranslationResult, coverage_tree
from cpg.graph import Graph

# frontend id -> callable(graph, text, path) -> TranslationResult
Frontend = Callable[[Graph, str, str], TranslationResult]

FRONTENDS: dict[str, Frontend] = {
    "frontend-c": c.translate_source,
    "frontend-generic": lambda graph, text, path: generic.ingest(graph, text),
}

# Checked longest suffix first so ".cpg.json" wins over a plain ".json".
EXTENSIONS: dict[str, str] = {
    ".c": "frontend-c",
    ".h": "frontend-c",
    ".cpg.json": "frontend-generic",
}


def register_frontend(name: str, extensions: tuple[str, ...], frontend: Frontend) -> None:
    FRONTENDS[name] = frontend
    for ext in extensions:
        EXTENSIONS[ext.lower()] = name


def dispatch(path: str | Path) -> str:
    """Return the id of the frontend responsible for ``path``."""
    name = Path(path).name.lower()
    for ext in sorted(EXTENSIONS, key=len, reverse=True):
        if name.endswith(ext) and len(name) > len(ext):
            return EXTENSIONS[ext]
    suffixes = Path(path).suffixes
    extension = "".join(suffixes[-2:]) if len(suffixes) > 1 and suffixes[-1] == ".json" else Path(path).suffix
    raise UnsupportedLanguageError(str(path), extension or "<none>")


def is_supported(path: str | Path) -> bool:
    try:
        dispatch(path)
    except UnsupportedLanguageError:
        return False
    return True


def translate_file(graph: Graph, path: str | Path) -> TranslationResult:
    frontend = FRONTENDS[dispatch(path)]
    text = Path(path).read_text(encoding="utf-8")
    return frontend(graph, text, str(path))


__all__ = [
    "CoverageRecord", "EXTENSIONS", "FRONTENDS", "TranslationResult", "coverage_tree",
    "dispatch", "is_supported", "register_frontend", "translate_file",
]
