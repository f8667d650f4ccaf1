"""Frontend that ingests language-neutral JSON AST documents.

Any external parser can feed the graph by emitting a document of the form::

    {"cpgAstVersion": "1", "language": "...", "file": "...",
     "root": {"kind": "TranslationUnitDeclaration", "children": [...]}}

Node objects carry ``kind`` plus optional ``role``, ``index``, ``name``,
``value``, ``operator``, ``location`` and ``children``.  Kind strings that are
not registered become ``ProblemNode`` nodes so that partial graphs still load.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from cpg.errors import IngestionError
from cpg.frontends.base import TranslationResult, coverage_tree
from cpg.graph import EdgeLabel, Graph, SourceLocation
from cpg.scopes import ScopeKind, ScopeManager
from cpg.taxonomy import Taxonomy

AST_VERSION = "1"
EXTENSIONS = (".cpg.json",)

_NODE_FIELDS = {"kind", "role", "index", "name", "value", "operator", "location", "children"}
_LOCATION_FIELDS = ("startLine", "startCol", "endLine", "endCol")


@dataclass(frozen=True)
class SchemaDiagnostic:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _span(loc: dict) -> tuple[int, int, int, int]:
    return tuple(loc[k] for k in _LOCATION_FIELDS)  # type: ignore[return-value]


def validate(document: Any) -> list[SchemaDiagnostic]:
    """Check ``document`` against the schema; an empty list means it can be ingested."""
    diags: list[SchemaDiagnostic] = []

    def err(path: str, message: str) -> None:
        diags.append(SchemaDiagnostic(path, message))

    if not isinstance(document, dict):
        err("$", "document must be an object")
        return diags
    if document.get("cpgAstVersion") != AST_VERSION:
        err("$.cpgAstVersion", f"must be {AST_VERSION!r}")
    for key in ("language", "file"):
        if not isinstance(document.get(key), str):
            err(f"$.{key}", "missing or not a string")
    root = document.get("root")
    if not isinstance(root, dict):
        err("$.root", "missing or not an object")
        return diags
    if root.get("kind") != "TranslationUnitDeclaration":
        err("$.root.kind", "root must be a TranslationUnitDeclaration")

    def check_location(path: str, loc: Any, parent: tuple | None) -> tuple | None:
        if not isinstance(loc, dict):
            err(path, "location must be an object")
            return None
        bad = False
        for key in _LOCATION_FIELDS:
            if not _is_int(loc.get(key)) or loc[key] < 1:
                err(f"{path}.{key}", "must be a positive integer")
                bad = True
        if bad:
            return None
        sl, sc, el, ec = _span(loc)
        if (sl, sc) > (el, ec):
            err(path, "start position is after end position")
            return None
        if parent is not None and ((sl, sc) < parent[:2] or (el, ec) > parent[2:]):
            err(path, "location is not nested within the parent location")
        return (sl, sc, el, ec)

    def check_node(path: str, node: Any, parent_span: tuple | None) -> None:
        if not isinstance(node, dict):
            err(path, "node must be an object")
            return
        for key in node:
            if key not in _NODE_FIELDS:
                err(f"{path}.{key}", "unknown field")
        if not isinstance(node.get("kind"), str) or not node.get("kind"):
            err(f"{path}.kind", "missing or not a string")
        for key in ("role", "name", "operator"):
            if key in node and node[key] is not None and not isinstance(node[key], str):
                err(f"{path}.{key}", "must be a string")
        if "index" in node and node["index"] is not None and (not _is_int(node["index"]) or node["index"] < 0):
            err(f"{path}.index", "must be a non-negative integer")
        if "value" in node and node["value"] is not None and not isinstance(node["value"], (str, int, bool)):
            err(f"{path}.value", "must be a string, integer, boolean or null")
        span = parent_span
        if node.get("location") is not None:
            span = check_location(f"{path}.location", node["location"], parent_span) or parent_span
        children = node.get("children", [])
        if not isinstance(children, list):
            err(f"{path}.children", "must be an array")
            return
        slots: set[tuple[str | None, int]] = set()
        for i, child in enumerate(children):
            child_path = f"{path}.children[{i}]"
            check_node(child_path, child, span)
            if isinstance(child, dict) and _is_int(child.get("index")):
                slot = (child.get("role"), child["index"])
                if slot in slots:
                    err(f"{child_path}.index", f"duplicate index {slot[1]} for role {slot[0]!r}")
                slots.add(slot)

    check_node("$.root", root, None)
    return diags


# Kinds that open a scope when ingested, with the scope they open.
_SCOPE_OPENERS = {
    "FunctionDeclaration": ScopeKind.FUNCTION,
    "RecordDeclaration": ScopeKind.RECORD,
    "NamespaceDeclaration": ScopeKind.RECORD,
    "CompoundStatement": ScopeKind.BLOCK,
    "WhileStatement": ScopeKind.LOOP,
    "DoStatement": ScopeKind.LOOP,
    "ForStatement": ScopeKind.LOOP,
    "TryStatement": ScopeKind.TRY,
}

_DECLARING = ("ValueDeclaration", "RecordDeclaration", "NamespaceDeclaration")


class _Ingestor:
    def __init__(self, graph: Graph, document: dict) -> None:
        self.graph = graph
        self.taxonomy: Taxonomy = graph.taxonomy
        self.file = document["file"]
        self.language = document["language"]
        self.scopes: ScopeManager | None = None
        self.unknown = 0

    def _scope_kind(self, kind: str) -> ScopeKind | None:
        for opener, scope_kind in _SCOPE_OPENERS.items():
            if self.taxonomy.is_subkind(kind, opener):
                return scope_kind
        return None

    def node(self, obj: dict) -> int:
        kind = obj["kind"]
        props: dict[str, Any] = {}
        if kind not in self.taxonomy or self.taxonomy.is_subkind(kind, "TypeNode"):
            props["originalKind"] = kind
            props["problemType"] = "UNHANDLED"
            kind = "ProblemNode"
            self.unknown += 1
        if "value" in obj:
            props["value"] = obj["value"]
        if obj.get("operator") is not None:
            props["operator"] = obj["operator"]
        loc = obj.get("location")
        location = SourceLocation(self.file, *_span(loc)) if loc is not None else None
        node_id = self.graph.add_node(kind, obj.get("name"), location, properties=props)
        if kind == "TranslationUnitDeclaration":
            self.graph.set_property(node_id, "language", self.language)
            self.scopes = ScopeManager(node_id)
        assert self.scopes is not None
        self.scopes.record(node_id)

        name = obj.get("name")
        if name and kind != "TranslationUnitDeclaration" and any(
            self.taxonomy.is_subkind(kind, d) for d in _DECLARING
        ):
            self.scopes.declare(name, node_id)
        scope_kind = None if kind == "ProblemNode" else self._scope_kind(kind)
        if scope_kind is not None:
            self.scopes.enter_scope(scope_kind, node_id)

        children: dict[str, int] = {}
        for position, child_obj in enumerate(obj.get("children", [])):
            child = self.node(child_obj)
            role = child_obj.get("role")
            index = child_obj.get("index")
            if index is None:
                index = position
            self.graph.add_edge(node_id, child, EdgeLabel.AST, role=role, index=index)
            if role is not None:
                children.setdefault(role, child)

        if scope_kind is ScopeKind.LOOP:
            cont = children.get("ITERATION", children.get("CONDITION", node_id))
            self.scopes.set_jump_targets(node_id, cont)
        if scope_kind is not None:
            self.scopes.leave_scope()
        return node_id


def load_document(text: str | bytes) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise IngestionError(f"invalid JSON: {exc.msg}", f"$ (line {exc.lineno})") from None


def ingest(graph: Graph, document: dict | str) -> TranslationResult:
    """Add the AST described by ``document`` to ``graph``."""
    if isinstance(document, (str, bytes)):
        document = load_document(document)
    diags = validate(document)
    if diags:
        first = diags[0]
        more = f" (+{len(diags) - 1} more)" if len(diags) > 1 else ""
        raise IngestionError(first.message + more, first.path)
    assert isinstance(document, dict)
    ingestor = _Ingestor(graph, document)
    root = ingestor.node(document["root"])
    assert ingestor.scopes is not None
    return TranslationResult(
        file=document["file"],
        language=document["language"],
        root=root,
        scope_tree=ingestor.scopes.tree,
        coverage_raw=coverage_tree(graph, root),
    )


def to_document(graph: Graph, root: int, language: str = "C") -> dict:
    """Export the AST under ``root`` as a generic AST document.

    This is the inverse of :func:`ingest` over kinds, roles, indices, names,
    values, operators and locations.
    """
    tu = graph.node(root)
    file = tu.location.file if tu.location else (tu.name or "")

    def convert(node_id: int, edge=None) -> dict:
        node = graph.node(node_id)
        obj: dict[str, Any] = {"kind": node.properties.get("originalKind", node.kind)}
        if edge is not None:
            if edge.role is not None:
                obj["role"] = edge.role
            if edge.index is not None:
                obj["index"] = edge.index
        if node.name is not None:
            obj["name"] = node.name
        if "value" in node.properties:
            obj["value"] = node.properties["value"]
        if node.properties.get("operator") is not None:
            obj["operator"] = node.properties["operator"]
        if node.location is not None:
            loc = node.location
            obj["location"] = {"startLine": loc.start_line, "startCol": loc.start_col,
                               "endLine": loc.end_line, "endCol": loc.end_col}
        obj["children"] = [convert(e.dst, e) for e in graph.ast_child_edges(node_id)]
        return obj

    return {"cpgAstVersion": AST_VERSION, "language": language, "file": file, "root": convert(root)}


__all__ = ["AST_VERSION", "EXTENSIONS", "SchemaDiagnostic", "ingest", "load_document",
           "to_document", "validate"]
