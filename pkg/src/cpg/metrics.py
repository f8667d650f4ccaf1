"""Source-line metrics: SLoC, translation coverage and the execution-time benchmark."""

from __future__ import annotations

import json
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from cpg.analysis import analyze, collect_files
from cpg.frontends import CoverageRecord, TranslationResult
from cpg.passes import AnalysisTimeout, DfgMode

COVERAGE_CAVEAT = (
    "Coverage is an upper bound: AST children that a frontend silently skips "
    "never reach a handler, so their lines are counted as covered."
)


def sloc_count(text: str) -> tuple[int, set[int]]:
    """Count source lines: non-blank lines with something besides comments."""
    lines: set[int] = set()
    line = 1
    i = 0
    n = len(text)
    in_block = False
    quote: str | None = None
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            quote = None  # unterminated literals end at the line break
            i += 1
            continue
        if in_block:
            if text.startswith("*/", i):
                in_block = False
                i += 2
            else:
                i += 1
            continue
        if quote is not None:
            lines.add(line)
            if ch == "\\":
                i += 2 if i + 1 < n and text[i + 1] != "\n" else 1
                continue
            if ch == quote:
                quote = None
            i += 1
            continue
        if text.startswith("//", i):
            end = text.find("\n", i)
            i = n if end < 0 else end
            continue
        if text.startswith("/*", i):
            in_block = True
            i += 2
            continue
        if not ch.isspace():
            lines.add(line)
            if ch in "\"'":
                quote = ch
        i += 1
    return len(lines), lines


@dataclass
class FileCoverage:
    file: str
    sloc: set[int]
    covered: set[int]
    uncovered: set[int]
    partial: set[int]

    def percentages(self) -> tuple[float, float, float]:
        return _percentages(len(self.sloc), len(self.covered), len(self.uncovered), len(self.partial))


def _percentages(total: int, covered: int, uncovered: int, partial: int) -> tuple[float, float, float]:
    if total == 0:
        return 100.0, 0.0, 0.0
    return (100.0 * covered / total, 100.0 * uncovered / total, 100.0 * partial / total)


def _span(record: CoverageRecord) -> set[int]:
    if record.lines is None:
        return set()
    start, end = record.lines
    return set(range(start, end + 1))


def classify(record: CoverageRecord) -> tuple[set[int], set[int], set[int]]:
    """Bottom-up (covered, uncovered, partial) line sets for one record tree."""
    span = _span(record)
    if not record.handled:
        return set(), span, set()
    if not record.children:
        return span, set(), set()
    covered: set[int] = set()
    uncovered: set[int] = set()
    partial: set[int] = set()
    for child in record.children:
        c, u, p = classify(child)
        # a line uncovered in one child and covered in another is partial
        partial |= p | (u & covered) | (c & uncovered)
        covered |= c
        uncovered |= u
    uncovered -= partial
    covered = (covered | span) - uncovered - partial
    return covered, uncovered, partial


def file_coverage(result: TranslationResult, sloc: set[int] | None = None) -> FileCoverage:
    """Coverage of one translation result over ``sloc``.

    Without ``sloc`` the source text of the result is counted, or, for
    sources that are not available, the lines spanned by the AST.
    """
    record = result.coverage_raw
    if sloc is None:
        if result.source is not None:
            sloc = sloc_count(result.source)[1]
        else:
            sloc = set().union(*(_span(r) for r in record.walk()))
    covered, uncovered, partial = classify(record)
    covered &= sloc
    partial &= sloc
    uncovered = (uncovered & sloc) | (sloc - covered - partial)
    return FileCoverage(result.file, set(sloc), covered, uncovered, partial)


@dataclass
class CoverageReport:
    files: list[FileCoverage] = field(default_factory=list)

    @property
    def sloc(self) -> int:
        return sum(len(f.sloc) for f in self.files)

    def totals(self) -> tuple[float, float, float]:
        return _percentages(
            self.sloc,
            sum(len(f.covered) for f in self.files),
            sum(len(f.uncovered) for f in self.files),
            sum(len(f.partial) for f in self.files),
        )

    def to_dict(self) -> dict:
        cov, unc, par = self.totals()
        return {
            "files": {
                f.file: {
                    "sloc": len(f.sloc),
                    "covered": sorted(f.covered),
                    "uncovered": sorted(f.uncovered),
                    "partial": sorted(f.partial),
                }
                for f in self.files
            },
            "totals": {"sloc": self.sloc, "covered": round(cov, 2),
                       "uncovered": round(unc, 2), "partial": round(par, 2)},
            "caveat": COVERAGE_CAVEAT,
        }

    def table(self) -> str:
        rows = [f"{'File':<40} {'SLoC':>6} {'Cov.[%]':>8} {'Uncov.[%]':>9} {'Partial[%]':>10}"]
        for f in self.files:
            cov, unc, par = f.percentages()
            rows.append(f"{f.file:<40} {len(f.sloc):>6} {cov:>8.2f} {unc:>9.2f} {par:>10.2f}")
        cov, unc, par = self.totals()
        rows.append(f"{'total':<40} {self.sloc:>6} {cov:>8.2f} {unc:>9.2f} {par:>10.2f}")
        rows.append("")
        rows.append(COVERAGE_CAVEAT)
        return "\n".join(rows) + "\n"


def coverage_report(results: Sequence[TranslationResult]) -> CoverageReport:
    return CoverageReport([file_coverage(r) for r in results])


# -- benchmark ----------------------------------------------------------------------

BENCH_COLUMNS = ("Repos#", "Total ET[s]", "ET Passes[%]", "Total SLoC#", "ET/SLoC[ms]",
                 "Avg SLoC#", "Cov.[%]", "Uncov.[%]", "Partial[%]")

# Published figures for the original tool, shown for orientation only.
REFERENCE_ROWS = {
    "Java (reference)": (97, 1042.10, 37.5, 211541, 4.92, 2180, 99.16, 0.7, 0.12),
    "C++ (reference)": (88, 687.98, 46.0, 148036, 4.65, 1682, 96.10, 3.8, 0.05),
}


@dataclass
class BenchTarget:
    target: str
    sloc: int = 0
    frontend_seconds: float = 0.0
    passes_seconds: float = 0.0
    timed_out: bool = False
    error: str | None = None
    coverage: CoverageReport | None = None

    @property
    def total_seconds(self) -> float:
        return self.frontend_seconds + self.passes_seconds

    @property
    def passes_share(self) -> float:
        total = self.total_seconds
        return self.passes_seconds / total if total > 0 else 0.0

    @property
    def et_per_sloc_ms(self) -> float:
        return 1000.0 * self.total_seconds / self.sloc if self.sloc else 0.0

    def to_dict(self) -> dict:
        row: dict = {"target": self.target, "sloc": self.sloc, "timedOut": self.timed_out}
        if self.error is not None:
            row["error"] = self.error
            return row
        row.update(
            totalEtSeconds=self.total_seconds,
            frontendEtSeconds=self.frontend_seconds,
            passesEtSeconds=self.passes_seconds,
            passesEtShare=self.passes_share,
            etPerSlocMs=self.et_per_sloc_ms,
        )
        if self.coverage is not None:
            cov, unc, par = self.coverage.totals()
            row.update(covered=cov, uncovered=unc, partial=par)
        return row


@dataclass
class BenchReport:
    targets: list[BenchTarget]
    timeout_seconds: float
    runs: int

    @property
    def completed(self) -> list[BenchTarget]:
        return [t for t in self.targets if not t.timed_out and t.error is None]

    def aggregate(self) -> dict:
        done = self.completed
        total = sum(t.total_seconds for t in done)
        passes = sum(t.passes_seconds for t in done)
        sloc = sum(t.sloc for t in done)
        files = [f for t in done if t.coverage is not None for f in t.coverage.files]
        cov, unc, par = CoverageReport(files).totals()
        return {
            "repos": len(done),
            "totalEtSeconds": total,
            "passesEtShare": passes / total if total > 0 else 0.0,
            "totalSloc": sloc,
            "etPerSlocMs": 1000.0 * total / sloc if sloc else 0.0,
            "avgSloc": sloc / len(done) if done else 0.0,
            "covered": cov,
            "uncovered": unc,
            "partial": par,
        }

    def to_dict(self) -> dict:
        return {
            "timeoutSeconds": self.timeout_seconds,
            "runs": self.runs,
            "perTarget": [t.to_dict() for t in self.targets],
            "aggregate": self.aggregate(),
            "reference": {k: dict(zip(BENCH_COLUMNS, v)) for k, v in REFERENCE_ROWS.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def table(self) -> str:
        agg = self.aggregate()
        widths = [max(len(c), 8) for c in BENCH_COLUMNS]
        header = f"{'':<18} " + " ".join(f"{c:>{w}}" for c, w in zip(BENCH_COLUMNS, widths))

        def row(label: str, values: Sequence) -> str:
            cells = []
            for value, w in zip(values, widths):
                text = f"{value:,}" if isinstance(value, int) else f"{value:.2f}"
                cells.append(f"{text:>{w}}")
            return f"{label:<18} " + " ".join(cells)

        measured = (
            agg["repos"], agg["totalEtSeconds"], 100.0 * agg["passesEtShare"], agg["totalSloc"],
            agg["etPerSlocMs"], round(agg["avgSloc"]), agg["covered"], agg["uncovered"], agg["partial"],
        )
        lines = [header, row("this run", measured)]
        lines += [row(label, values) for label, values in REFERENCE_ROWS.items()]
        timed_out = [t.target for t in self.targets if t.timed_out]
        errors = [f"{t.target}: {t.error}" for t in self.targets if t.error]
        lines.append("")
        lines.append("Reference rows are published figures for a different tool and corpus; "
                     "they are not reproduced or checked here.")
        if timed_out:
            lines.append(f"timed out (excluded): {', '.join(timed_out)}")
        lines.extend(f"error: {e}" for e in errors)
        lines.append(COVERAGE_CAVEAT)
        return "\n".join(lines) + "\n"


def bench_target(
    target: str | Path,
    timeout_seconds: float,
    runs: int = 3,
    warmup: int = 1,
    dfg_mode: DfgMode | str = DfgMode.FLOW_SENSITIVE,
) -> BenchTarget:
    """Median timings of ``runs`` analyses of one target (a file or directory)."""
    row = BenchTarget(str(target))
    if not Path(target).exists():
        row.error = "target does not exist"
        return row
    if not collect_files([target]):
        row.error = "no supported source files"
        return row
    frontend, passes = [], []
    for attempt in range(warmup + runs):
        started = time.monotonic()
        try:
            analysis = analyze([target], dfg_mode=dfg_mode, timeout_seconds=timeout_seconds)
        except AnalysisTimeout:
            row.timed_out = True
            break
        if time.monotonic() - started >= timeout_seconds:
            row.timed_out = True
            break
        if attempt < warmup:
            continue
        frontend.append(analysis.frontend_seconds)
        passes.append(analysis.passes_seconds)
        if row.coverage is None:
            row.coverage = coverage_report(analysis.results)
            row.sloc = row.coverage.sloc
            if analysis.errors and not analysis.results:
                row.error = "; ".join(str(e) for e in analysis.errors)
    if not row.timed_out and frontend:
        row.frontend_seconds = statistics.median(frontend)
        row.passes_seconds = statistics.median(passes)
    return row


def bench(
    targets: Sequence[str | Path],
    timeout_seconds: float = 300.0,
    runs: int = 3,
    warmup: int = 1,
    dfg_mode: DfgMode | str = DfgMode.FLOW_SENSITIVE,
) -> BenchReport:
    """Benchmark targets one after another; one warm-up run each is discarded."""
    rows = [bench_target(t, timeout_seconds, runs, warmup, dfg_mode) for t in targets]
    return BenchReport(rows, timeout_seconds, runs)
