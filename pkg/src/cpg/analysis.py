"""Translate files and run the pass pipeline over the merged graph."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from cpg.errors import CpgError
from cpg.frontends import TranslationResult, is_supported, translate_file
from cpg.frontends.c import translate_source
from cpg.graph import Graph
from cpg.passes import DEFAULT_PASSES, DfgMode, Pass, PassContext, run_passes
from cpg.scopes import Diagnostic

logger = logging.getLogger(__name__)


@dataclass
class FileError:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


@dataclass
class Analysis:
    graph: Graph
    results: list[TranslationResult] = field(default_factory=list)
    errors: list[FileError] = field(default_factory=list)
    context: PassContext | None = None
    frontend_seconds: float = 0.0
    pass_seconds: dict[str, float] = field(default_factory=dict)

    @property
    def diagnostics(self) -> list[Diagnostic]:
        found = [d for r in self.results for d in r.diagnostics]
        if self.context is not None:
            found.extend(self.context.diagnostics)
        return found

    @property
    def passes_seconds(self) -> float:
        return sum(self.pass_seconds.values())


def collect_files(paths: Iterable[str | Path]) -> list[Path]:
    """Expand directories (recursively, sorted) into the supported files they contain.

    Explicitly named files are kept even if unsupported, so the caller sees
    an error for them.
    """
    files: list[Path] = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            files.extend(p for p in sorted(path.rglob("*")) if p.is_file() and is_supported(p))
        else:
            files.append(path)
    return files


def translate_all(graph: Graph, paths: Sequence[str | Path]) -> tuple[list[TranslationResult], list[FileError]]:
    results: list[TranslationResult] = []
    errors: list[FileError] = []
    for path in collect_files(paths):
        try:
            results.append(translate_file(graph, path))
        except (CpgError, OSError, UnicodeDecodeError) as exc:
            logger.info("skipping %s: %s", path, exc)
            errors.append(FileError(str(path), str(exc)))
    return results, errors


def run_pipeline(
    analysis: Analysis,
    dfg_mode: DfgMode | str = DfgMode.FLOW_SENSITIVE,
    passes: Sequence[Pass] = DEFAULT_PASSES,
    deadline: float | None = None,
) -> Analysis:
    ctx = PassContext(
        analysis.graph,
        [r.scope_tree for r in analysis.results],
        dfg_mode=DfgMode.parse(dfg_mode),
    )
    analysis.context = ctx
    analysis.pass_seconds = run_passes(ctx, passes, deadline)
    return analysis


def analyze(
    paths: Sequence[str | Path],
    dfg_mode: DfgMode | str = DfgMode.FLOW_SENSITIVE,
    passes: Sequence[Pass] | None = DEFAULT_PASSES,
    timeout_seconds: float | None = None,
) -> Analysis:
    """Translate ``paths`` and run ``passes`` (none if ``passes`` is None).

    A file that cannot be translated is recorded in ``errors``; the rest of
    the run continues.  With a timeout, :class:`~cpg.passes.AnalysisTimeout`
    is raised between pipeline steps once it has passed.
    """
    deadline = time.monotonic() + timeout_seconds if timeout_seconds is not None else None
    graph = Graph()
    started = time.perf_counter()
    results, errors = translate_all(graph, paths)
    analysis = Analysis(graph, results, errors, frontend_seconds=time.perf_counter() - started)
    if passes is not None:
        run_pipeline(analysis, dfg_mode, passes, deadline)
    return analysis


def analyze_text(
    source: str,
    path: str = "input.c",
    dfg_mode: DfgMode | str = DfgMode.FLOW_SENSITIVE,
    passes: Sequence[Pass] | None = DEFAULT_PASSES,
) -> Analysis:
    """Analyse C source held in memory."""
    graph = Graph()
    started = time.perf_counter()
    result = translate_source(graph, source, path)
    analysis = Analysis(graph, [result], frontend_seconds=time.perf_counter() - started)
    if passes is not None:
        run_pipeline(analysis, dfg_mode, passes)
    return analysis
