from __future__ import annotations

import json
import subprocess
import sys

import pytest

from cpg.cli import main

import programs


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def test_findings_exit_one(write, capsys):
    path = write("null.c", programs.NULL_FLAGGED)
    assert main(["analyze", path, "--check", "null-deref"]) == 1
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 1 and out[0].startswith(f"{path}:4:") and "null-deref" in out[0]


def test_clean_exit_zero(write, capsys):
    path = write("clean.c", programs.NULL_REASSIGNED)
    assert main(["analyze", path, "--check", "null-deref"]) == 0
    assert capsys.readouterr().out == ""


def test_unsupported_language_exit_two(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "missing.xyz")]) == 2
    assert ".xyz" in capsys.readouterr().err


def test_bad_file_does_not_stop_others(write, tmp_path, capsys):
    good = write("null.c", programs.NULL_FLAGGED)
    assert main(["analyze", str(tmp_path / "bad.rb"), good, "--check", "null-deref"]) == 2
    captured = capsys.readouterr()
    assert "null-deref" in captured.out and "bad.rb" in captured.err


def test_decl_mode_check_is_an_error(write, capsys):
    path = write("null.c", programs.NULL_FLAGGED)
    assert main(["analyze", path, "--dfg-mode", "decl", "--check", "null-deref"]) == 2


def test_export_and_findings_files(write, tmp_path):
    path = write("null.c", programs.NULL_FLAGGED)
    out = tmp_path / "graph.json"
    assert main(["analyze", path, "--check", "null-deref", "--export", "json", "--out", str(out)]) == 1
    assert json.loads(out.read_text())["cpgVersion"] == "1"
    [finding] = json.loads((tmp_path / "graph.json.findings.json").read_text())
    assert finding["check"] == "null-deref" and len(finding["witness"]) >= 2


def test_findings_file_without_export(write, tmp_path):
    path = write("null.c", programs.NULL_FLAGGED)
    out = tmp_path / "findings.json"
    main(["analyze", path, "--check", "null-deref", "--out", str(out)])
    assert len(json.loads(out.read_text())) == 1


def test_export_needs_out(write):
    assert main(["analyze", write("a.c", programs.BINARY_EXAMPLE), "--export", "dot"]) == 2


def test_coverage_report(write, tmp_path, capsys):
    path = write("u.c", programs.ONE_UNHANDLED)
    out = tmp_path / "r"
    assert main(["analyze", path, "--coverage", "--out", str(out)]) == 0
    assert "Cov.[%]" in capsys.readouterr().out
    data = json.loads((tmp_path / "r.coverage.json").read_text())
    assert data["files"][path]["uncovered"] == [4]


def test_bench_report(write, tmp_path, capsys):
    path = write("loops.c", programs.NESTED_LOOPS)
    out = tmp_path / "b"
    assert main(["analyze", path, "--bench", "--out", str(out)]) == 0
    assert "ET Passes[%]" in capsys.readouterr().out
    data = json.loads((tmp_path / "b.bench.json").read_text())
    assert data["runs"] == 3 and data["aggregate"]["repos"] == 1


def test_bench_timeout_is_an_error(write):
    path = write("loops.c", programs.NESTED_LOOPS)
    assert main(["analyze", path, "--bench", "--timeout-seconds", "0"]) == 2


def test_reports_are_deterministic(write, tmp_path):
    path = write("loops.c", programs.NESTED_LOOPS)
    texts = []
    for i in range(2):
        out = tmp_path / f"g{i}.cypher"
        main(["analyze", path, "--export", "cypher", "--out", str(out)])
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]


def test_console_subcommand(write):
    path = write("t.c", programs.TERNARY_EXAMPLE)
    proc = subprocess.run(
        [sys.executable, "-m", "cpg.cli", "console", path],
        input="nodes ConditionalExpression\nfrobnicate\nquit\n",
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert "ConditionalExpression" in proc.stdout and "unknown command" in proc.stdout


def test_installed_entry_point(write):
    path = write("null.c", programs.NULL_FLAGGED)
    proc = subprocess.run(["cpg", "analyze", path, "--check", "null-deref"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 1
