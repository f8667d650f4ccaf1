"""Graph serialization: lossless JSON, Graphviz DOT and Cypher statements."""

from __future__ import annotations

import json
import re
from typing import Any, Iterable

from cpg.errors import EdgeAttributeError, SchemaError, TaxonomyError
from cpg.graph import BranchValue, Edge, EdgeLabel, Flag, Graph, Node, SourceLocation
from cpg.taxonomy import Taxonomy

CPG_VERSION = "1"

_LOCATION_KEYS = ("file", "startLine", "startCol", "endLine", "endCol")


def _edge_key(edge: Edge) -> tuple:
    return (
        edge.src, edge.dst, edge.label.value,
        edge.role or "", -1 if edge.index is None else edge.index,
        "" if edge.branch is None else str(edge.branch),
    )


def _node_document(node: Node) -> dict[str, Any]:
    doc: dict[str, Any] = {"id": node.id, "kind": node.kind}
    if node.name is not None:
        doc["name"] = node.name
    doc["flags"] = sorted(f.value for f in node.flags)
    if node.location is not None:
        loc = node.location
        doc["location"] = dict(zip(_LOCATION_KEYS, (
            loc.file, loc.start_line, loc.start_col, loc.end_line, loc.end_col)))
    doc["properties"] = {k: node.properties[k] for k in sorted(node.properties)}
    return doc


def _edge_document(edge: Edge) -> dict[str, Any]:
    doc: dict[str, Any] = {"from": edge.src, "to": edge.dst, "label": edge.label.value}
    if edge.role is not None:
        doc["role"] = edge.role
    if edge.index is not None:
        doc["index"] = edge.index
    if edge.branch is not None:
        doc["branch"] = str(edge.branch)
    return doc


def to_document(graph: Graph) -> dict[str, Any]:
    return {
        "cpgVersion": CPG_VERSION,
        "nodes": [_node_document(graph.nodes[i]) for i in sorted(graph.nodes)],
        "edges": [_edge_document(e) for e in sorted(graph.edges, key=_edge_key)],
    }


def to_json(graph: Graph) -> str:
    """Serialize ``graph``; equal graphs always produce identical text."""
    return json.dumps(to_document(graph), separators=(",", ":"), ensure_ascii=False)


# -- JSON import ------------------------------------------------------------------


def _expect(condition: bool, message: str, path: str) -> None:
    if not condition:
        raise SchemaError(message, path)


def _is_int(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _location(raw: object, path: str) -> SourceLocation:
    _expect(isinstance(raw, dict), "location must be an object", path)
    assert isinstance(raw, dict)
    _expect(set(raw) == set(_LOCATION_KEYS), f"location needs exactly {list(_LOCATION_KEYS)}", path)
    _expect(isinstance(raw["file"], str), "file must be a string", f"{path}.file")
    for key in _LOCATION_KEYS[1:]:
        _expect(_is_int(raw[key]), f"{key} must be an integer", f"{path}.{key}")
    try:
        return SourceLocation(*(raw[k] for k in _LOCATION_KEYS))
    except ValueError as exc:
        raise SchemaError(str(exc), path) from None


def _load_node(graph: Graph, raw: object, path: str) -> None:
    _expect(isinstance(raw, dict), "node must be an object", path)
    assert isinstance(raw, dict)
    unknown = set(raw) - {"id", "kind", "name", "flags", "location", "properties"}
    _expect(not unknown, f"unknown fields {sorted(unknown)}", path)
    _expect(_is_int(raw.get("id")) and raw["id"] >= 1, "id must be a positive integer", f"{path}.id")
    _expect(isinstance(raw.get("kind"), str), "kind must be a string", f"{path}.kind")
    name = raw.get("name")
    _expect(name is None or isinstance(name, str), "name must be a string", f"{path}.name")
    flags = raw.get("flags", [])
    _expect(isinstance(flags, list) and all(f in Flag.__members__ for f in flags),
            "flags must be a list of IMPLICIT/INFERRED", f"{path}.flags")
    location = _location(raw["location"], f"{path}.location") if "location" in raw else None
    props = raw.get("properties", {})
    _expect(isinstance(props, dict), "properties must be an object", f"{path}.properties")
    for key, value in props.items():
        _expect(value is None or isinstance(value, (str, int, bool)),
                "property values must be scalars", f"{path}.properties.{key}")
    if raw["id"] in graph.nodes:
        raise SchemaError(f"duplicate node id {raw['id']}", f"{path}.id")
    if raw["kind"] not in graph.taxonomy:
        raise TaxonomyError(f"unknown node kind {raw['kind']!r}")
    try:
        graph.add_node(raw["kind"], name, location, [Flag(f) for f in flags],
                       properties=props, node_id=raw["id"])
    except ValueError as exc:
        raise SchemaError(str(exc), path) from None


def _load_edge(graph: Graph, raw: object, path: str) -> None:
    _expect(isinstance(raw, dict), "edge must be an object", path)
    assert isinstance(raw, dict)
    unknown = set(raw) - {"from", "to", "label", "role", "index", "branch"}
    _expect(not unknown, f"unknown fields {sorted(unknown)}", path)
    for end in ("from", "to"):
        _expect(_is_int(raw.get(end)), f"{end} must be an integer", f"{path}.{end}")
        _expect(raw[end] in graph.nodes, f"node {raw[end]} does not exist", f"{path}.{end}")
    _expect(raw.get("label") in EdgeLabel.__members__, "unknown edge label", f"{path}.label")
    role = raw.get("role")
    _expect(role is None or isinstance(role, str), "role must be a string", f"{path}.role")
    index = raw.get("index")
    _expect(index is None or _is_int(index), "index must be an integer", f"{path}.index")
    branch = raw.get("branch")
    _expect(branch is None or isinstance(branch, str), "branch must be a string", f"{path}.branch")
    try:
        parsed = BranchValue.parse(branch) if branch is not None else None
        graph.add_edge(raw["from"], raw["to"], raw["label"], role, index, parsed)
    except (ValueError, EdgeAttributeError) as exc:
        raise SchemaError(str(exc), path) from None


def from_json(text: str | bytes, taxonomy: Taxonomy | None = None) -> Graph:
    """Rebuild a graph, keeping node ids.  Errors name the offending JSON path."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", "$") from None
    _expect(isinstance(doc, dict), "document must be an object", "$")
    _expect(doc.get("cpgVersion") == CPG_VERSION, f"cpgVersion must be {CPG_VERSION!r}", "$.cpgVersion")
    for key in ("nodes", "edges"):
        _expect(isinstance(doc.get(key), list), f"{key} must be an array", f"$.{key}")
    graph = Graph(taxonomy)
    for i, raw in enumerate(doc["nodes"]):
        _load_node(graph, raw, f"$.nodes[{i}]")
    for i, raw in enumerate(doc["edges"]):
        _load_edge(graph, raw, f"$.edges[{i}]")
    return graph


def canonical(graph: Graph) -> tuple[list, list]:
    """Order-independent view of nodes and edges, for comparing graphs."""
    nodes = [
        (n.id, n.kind, n.name, n.location, tuple(sorted(f.value for f in n.flags)),
         tuple(sorted(n.properties.items())))
        for n in sorted(graph, key=lambda n: n.id)
    ]
    return nodes, sorted(_edge_key(e) for e in graph.edges)


def isomorphic(a: Graph, b: Graph) -> bool:
    """Equal up to ordering, with node ids taken as the correspondence."""
    return canonical(a) == canonical(b)


# -- DOT --------------------------------------------------------------------------

_DOT_STYLE = {
    EdgeLabel.AST: "solid",
    EdgeLabel.EOG: "dashed",
    EdgeLabel.DFG: "dotted",
    EdgeLabel.REFERS_TO: "solid",
    EdgeLabel.INVOKES: "bold",
    EdgeLabel.SUPERTYPE: "solid",
}


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def to_dot(graph: Graph, labels: Iterable[EdgeLabel | str] | None = None) -> str:
    """One digraph.  ``labels`` selects edge labels; None means all, empty means none."""
    wanted = set(EdgeLabel) if labels is None else {EdgeLabel(label) for label in labels}
    lines = ["digraph cpg {", "  node [shape=box];"]
    for node_id in sorted(graph.nodes):
        node = graph.nodes[node_id]
        label = node.kind if node.name is None else f"{node.kind} {node.name}"
        lines.append(f"  n{node_id} [label={_dot_quote(label)}];")
    for edge in sorted(graph.edges, key=_edge_key):
        if edge.label not in wanted:
            continue
        text = edge.label.value
        if edge.role is not None:
            text += f" {edge.role}" + (f"[{edge.index}]" if edge.index is not None else "")
        if edge.branch is not None:
            text += f" {edge.branch}"
        lines.append(
            f"  n{edge.src} -> n{edge.dst} [label={_dot_quote(text)}, style={_DOT_STYLE[edge.label]}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- Cypher -----------------------------------------------------------------------

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _cypher_value(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_cypher_value(v) for v in value) + "]"
    text = str(value).replace("\\", "\\\\").replace("'", "\\'").replace("\n", "\\n").replace("\r", "\\r")
    return f"'{text}'"


def _cypher_key(key: str) -> str:
    return key if _IDENTIFIER.match(key) else "`" + key.replace("`", "``") + "`"


def _cypher_map(items: dict[str, object]) -> str:
    body = ", ".join(f"{_cypher_key(k)}: {_cypher_value(v)}" for k, v in items.items() if v is not None)
    return "{" + body + "}"


def node_labels(graph: Graph, node_id: int) -> list[str]:
    """Cypher labels of a node: its kind's ancestor chain, root first."""
    return graph.taxonomy.ancestors(graph.kind_of(node_id))


def cypher_statements(graph: Graph) -> list[str]:
    statements = []
    for node_id in sorted(graph.nodes):
        node = graph.nodes[node_id]
        props: dict[str, object] = {"cpgId": node_id, "kind": node.kind, "name": node.name}
        if node.flags:
            props["flags"] = sorted(f.value for f in node.flags)
        if node.location is not None:
            loc = node.location
            props.update(file=loc.file, startLine=loc.start_line, startCol=loc.start_col,
                         endLine=loc.end_line, endCol=loc.end_col)
        for key in sorted(node.properties):
            props.setdefault(key, node.properties[key])
        labels = "".join(f":{_cypher_key(label)}" for label in node_labels(graph, node_id))
        statements.append(f"CREATE (n{node_id}{labels} {_cypher_map(props)})")
    for edge in sorted(graph.edges, key=_edge_key):
        props = {"role": edge.role, "index": edge.index,
                 "branch": None if edge.branch is None else str(edge.branch)}
        rel = edge.label.value
        if any(v is not None for v in props.values()):
            rel += " " + _cypher_map(props)
        statements.append(
            f"MATCH (a {{cpgId: {edge.src}}}), (b {{cpgId: {edge.dst}}}) CREATE (a)-[:{rel}]->(b)"
        )
    return statements


def to_cypher(graph: Graph) -> str:
    """Statements separated by ``;`` and newlines; empty text for an empty graph."""
    return "".join(s + ";\n" for s in cypher_statements(graph))


FORMATS = {"json": to_json, "dot": to_dot, "cypher": to_cypher}


def export(graph: Graph, fmt: str) -> str:
    try:
        writer = FORMATS[fmt]
    except KeyError:
        raise ValueError(f"unknown export format {fmt!r} (use {', '.join(FORMATS)})") from None
    return writer(graph)
