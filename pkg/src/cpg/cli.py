"""Command line entry point: ``cpg analyze`` and ``cpg console``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from cpg.analysis import analyze
from cpg.checks import CHECKS, Finding, run_check
from cpg.console import run_console, session_for
from cpg.errors import CpgError
from cpg.export import export
from cpg.metrics import bench, coverage_report
from cpg.passes import AnalysisTimeout, DfgMode

EXIT_OK, EXIT_FINDINGS, EXIT_ERROR = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cpg", description="Build and query code property graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log pass progress")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("analyze", help="translate, run passes, checks, exports and reports")
    run.add_argument("paths", nargs="+", help="source files or directories")
    run.add_argument("--dfg-mode", default="flow", choices=["flow", "decl"])
    run.add_argument("--check", action="append", default=[], metavar="NAME",
                     help=f"run a check; repeatable (available: {', '.join(sorted(CHECKS))})")
    run.add_argument("--export", choices=["json", "dot", "cypher"])
    run.add_argument("--out", metavar="FILE",
                     help="export target; findings go to FILE.findings.json next to an export, "
                          "or to FILE itself without --export")
    run.add_argument("--coverage", action="store_true", help="print the coverage table")
    run.add_argument("--bench", action="store_true", help="benchmark each path as one target")
    run.add_argument("--timeout-seconds", type=float, default=None, metavar="N")

    console = sub.add_parser("console", help="interactive shell")
    console.add_argument("paths", nargs="*")
    return parser


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")


def _findings_json(findings: list[Finding]) -> str:
    return json.dumps([f.to_dict() for f in findings], indent=2) + "\n"


def _analyze(args: argparse.Namespace) -> int:
    if args.export and not args.out:
        print("error: --export needs --out FILE", file=sys.stderr)
        return EXIT_ERROR
    failed = False
    out = Path(args.out) if args.out else None

    if args.bench:
        timeout = args.timeout_seconds if args.timeout_seconds is not None else 300.0
        report = bench(args.paths, timeout, dfg_mode=args.dfg_mode)
        sys.stdout.write(report.table())
        if out is not None:
            _write(out.with_name(out.name + ".bench.json"), report.to_json() + "\n")
        failed = any(t.error or t.timed_out for t in report.targets)
        if not (args.check or args.export or args.coverage):
            return EXIT_ERROR if failed else EXIT_OK

    try:
        analysis = analyze(args.paths, dfg_mode=args.dfg_mode, timeout_seconds=args.timeout_seconds)
    except AnalysisTimeout as exc:
        print(f"error: timeout: {exc}", file=sys.stderr)
        return EXIT_ERROR
    for error in analysis.errors:
        print(f"error: {error}", file=sys.stderr)
        failed = True

    findings: list[Finding] = []
    for name in args.check:
        try:
            findings.extend(run_check(name, analysis.graph))
        except CpgError as exc:
            print(f"error: {exc}", file=sys.stderr)
            failed = True
    for finding in findings:
        print(finding)

    if args.export:
        assert out is not None
        _write(out, export(analysis.graph, args.export))
    if out is not None and args.check:
        target = out.with_name(out.name + ".findings.json") if args.export else out
        _write(target, _findings_json(findings))

    if args.coverage:
        report = coverage_report(analysis.results)
        sys.stdout.write(report.table())
        if out is not None:
            _write(out.with_name(out.name + ".coverage.json"),
                   json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")

    if failed:
        return EXIT_ERROR
    return EXIT_FINDINGS if findings else EXIT_OK


def _console(args: argparse.Namespace) -> int:
    session, errors = session_for(args.paths)
    for error in errors:
        print(f"error: {error}", file=sys.stderr)
    run_console(session, sys.stdin, sys.stdout, prompt="cpg> " if sys.stdin.isatty() else "")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    args.dfg_mode = DfgMode.parse(args.dfg_mode) if args.command == "analyze" else None
    if args.command == "analyze":
        return _analyze(args)
    return _console(args)


if __name__ == "__main__":
    sys.exit(main())
