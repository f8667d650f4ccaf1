from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cpg.analysis import Analysis, analyze_text  # noqa: E402
from cpg.graph import Graph  # noqa: E402


def find(graph: Graph, kind: str, name: str | None = None, **props) -> list[int]:
    """Node ids of ``kind`` (subkinds excluded), optionally filtered by name and properties."""
    found = []
    for node_id in graph.nodes_by_kind(kind):
        node = graph.node(node_id)
        if name is not None and node.name != name:
            continue
        if any(node.properties.get(k) != v for k, v in props.items()):
            continue
        found.append(node_id)
    return sorted(found)


def one(graph: Graph, kind: str, name: str | None = None, **props) -> int:
    found = find(graph, kind, name, **props)
    assert len(found) == 1, f"expected one {kind} {name or ''}, got {found}"
    return found[0]


def eog_succ(graph: Graph, node_id: int) -> list[int]:
    return [e.dst for e in graph.out_edges(node_id, "EOG")]


@pytest.fixture
def run():
    def _run(source: str, dfg_mode: str = "flow", path: str = "input.c") -> Analysis:
        return analyze_text(source, path=path, dfg_mode=dfg_mode)
    return _run


@pytest.fixture
def corpus_dir() -> Path:
    return Path(__file__).resolve().parents[1] / "src" / "cpg" / "corpus"


def graph_def_use(graph: Graph) -> set[tuple]:
    """(writer, read position) pairs from DFG edges that end at a read reference."""
    from cpg.passes.base import is_write

    pairs = set()
    for edge in graph.edges_with_label("DFG"):
        if not graph.is_a(edge.dst, "DeclaredReferenceExpression") or is_write(graph, edge.dst):
            continue
        src = graph.node(edge.src)
        if src.kind == "ParameterDeclaration":
            writer = ("param", src.name)
        elif src.kind == "VariableDeclaration" or (
            graph.is_a(edge.src, "DeclaredReferenceExpression") and is_write(graph, edge.src)
        ):
            writer = ("at", src.location.start_line, src.location.start_col)
        else:
            continue
        dst = graph.node(edge.dst).location
        pairs.add((writer, (dst.start_line, dst.start_col)))
    return pairs


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
