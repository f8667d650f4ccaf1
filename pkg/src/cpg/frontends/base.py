from __future__ import annotations

from dataclasses import dataclass, field

from cpg.graph import Graph
from cpg.scopes import Diagnostic, ScopeTree


@dataclass
class CoverageRecord:
    """Handled/unhandled status of one AST node and its line span.

    ``lines`` is ``None`` for nodes without a source location.
    """

    node: int | None
    handled: bool
    lines: tuple[int, int] | None
    children: list[CoverageRecord] = field(default_factory=list)

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass
class TranslationResult:
    file: str
    language: str
    root: int
    scope_tree: ScopeTree
    coverage_raw: CoverageRecord
    source: str | None = None
    diagnostics: list[Diagnostic] = field(default_factory=list)


def coverage_tree(graph: Graph, root: int) -> CoverageRecord:
    """Build the coverage record tree for the AST under ``root``.

    ProblemNodes are unhandled and their subtrees are not descended into.
    IMPLICIT and INFERRED nodes do not correspond to source and are skipped.
    """

    def build(node_id: int) -> CoverageRecord:
        node = graph.node(node_id)
        loc = node.location
        lines = (loc.start_line, loc.end_line) if loc is not None else None
        if graph.is_a(node_id, "ProblemNode"):
            return CoverageRecord(node_id, False, lines)
        record = CoverageRecord(node_id, True, lines)
        for child in graph.ast_children(node_id):
            child_node = graph.node(child)
            if child_node.implicit or child_node.inferred:
                continue
            record.children.append(build(child))
        return record

    return build(root)

