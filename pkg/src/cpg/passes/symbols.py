"""Draws REFERS_TO edges from references to the declarations they name."""

from __future__ import annotations

from cpg.graph import EdgeLabel
from cpg.passes.base import PassContext, refers_to


def _record_name(type_name: str | None) -> str | None:
    if not type_name:
        return None
    base = type_name.rstrip("*").strip()
    if base.startswith("struct "):
        return base[len("struct "):]
    return None


def symbol_pass(ctx: PassContext) -> None:
    graph = ctx.graph
    for ref in graph.nodes_by_kind("DeclaredReferenceExpression", include_subkinds=True):
        if refers_to(graph, ref) is not None:
            continue
        name = graph.node(ref).name
        if not name:
            continue
        decl = ctx.resolve(name, ref)
        if decl is None or graph.kind_of(decl) == "TranslationUnitDeclaration":
            continue
        graph.add_edge(ref, decl, EdgeLabel.REFERS_TO)

    # Inner members of a chain like a.b.c have larger ids, so descending order
    # resolves bases before the members built on them.
    for member in sorted(graph.nodes_by_kind("MemberExpression"), reverse=True):
        if refers_to(graph, member) is not None:
            continue
        base = graph.ast_child(member, "BASE")
        base_decl = refers_to(graph, base) if base is not None else None
        if base_decl is None:
            continue
        record = _record_name(graph.node(base_decl).properties.get("type"))  # type: ignore[arg-type]
        if record is None:
            continue
        field = ctx.resolve(f"{record}.{graph.node(member).name}", member)
        if field is not None:
            graph.add_edge(member, field, EdgeLabel.REFERS_TO)
