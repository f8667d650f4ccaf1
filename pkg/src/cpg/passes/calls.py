"""Best-effort call resolution producing INVOKES edges."""

from __future__ import annotations

from cpg.graph import EdgeLabel, Graph
from cpg.passes.base import UNKNOWN_TYPE, PassContext


def _typed(value: object) -> str | None:
    return value if isinstance(value, str) and value and value != UNKNOWN_TYPE else None


def parameter_types(graph: Graph, function: int) -> list[str | None]:
    return [_typed(graph.node(p).properties.get("type")) for p in graph.ast_children(function, "PARAMETER")]


def argument_types(graph: Graph, call: int) -> list[str | None]:
    return [_typed(graph.node(a).properties.get("type")) for a in graph.ast_children(call, "ARGUMENT")]


def _has_body(graph: Graph, function: int) -> bool:
    return graph.ast_child(function, "BODY") is not None


def candidates(graph: Graph, call: int) -> list[int]:
    """Functions a call may target.

    Name match, then arity, then exact parameter types where the argument
    type is known.  Prototypes are dropped when a definition with the same
    signature exists.  All survivors are returned.
    """
    name = graph.node(call).name
    if not name:
        return []
    by_name = [n for n in graph.nodes_by_name(name) if graph.is_a(n, "FunctionDeclaration")]
    args = argument_types(graph, call)
    matching = [f for f in by_name if len(graph.ast_children(f, "PARAMETER")) == len(args)]

    def exact(function: int) -> bool:
        params = parameter_types(graph, function)
        return all(a is None or p is None or a == p for a, p in zip(args, params))

    if any(a is not None for a in args):
        exact_matches = [f for f in matching if exact(f)]
        if exact_matches:
            matching = exact_matches

    defined = {tuple(parameter_types(graph, f)) for f in matching if _has_body(graph, f)}
    return [
        f for f in matching
        if _has_body(graph, f) or tuple(parameter_types(graph, f)) not in defined
    ]


def call_pass(ctx: PassContext) -> None:
    graph = ctx.graph
    for call in graph.nodes_by_kind("CallExpression", include_subkinds=True):
        if graph.out_edges(call, EdgeLabel.INVOKES):
            continue
        for target in candidates(graph, call):
            graph.add_edge(call, target, EdgeLabel.INVOKES)
