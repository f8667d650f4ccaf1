"""Path properties of EOG subgraphs, checked by reachability."""

from __future__ import annotations

from collections import deque

from cpg.graph import Graph

BRANCHING_OPERATORS = ("&&", "||")


def reachable(graph: Graph, start: int, removed: set[int] = frozenset()) -> set[int]:
    """Nodes reachable from ``start`` over EOG edges while avoiding ``removed``."""
    seen = {start}
    queue = deque([start])
    while queue:
        for edge in graph.out_edges(queue.popleft(), "EOG"):
            if edge.dst not in seen and edge.dst not in removed:
                seen.add(edge.dst)
                queue.append(edge.dst)
    return seen


def in_eog(graph: Graph, node: int) -> bool:
    return bool(graph.in_edges(node, "EOG") or graph.out_edges(node, "EOG"))


def eog_nodes(graph: Graph, root: int) -> set[int]:
    """Nodes of the AST subtree under ``root`` that take part in the EOG."""
    return {n for n in graph.ast_descendants(root) if in_eog(graph, n)}


def precedes_always(graph: Graph, entry: int, before: set[int], after: set[int]) -> bool:
    """Every EOG path from ``entry`` into ``after`` passes through ``before`` first."""
    if not before:
        return False
    return not (reachable(graph, entry, before) & after)


def is_branching(graph: Graph, node: int) -> bool:
    kind = graph.kind_of(node)
    if kind in ("IfStatement", "WhileStatement", "DoStatement", "ForStatement", "ConditionalExpression"):
        return True
    return kind == "BinaryOperator" and graph.node(node).properties.get("operator") in BRANCHING_OPERATORS


def unconditional_descendants(graph: Graph, node: int) -> set[int]:
    """Descendants evaluated whenever ``node`` is: conditional operands are skipped."""
    found: set[int] = set()
    stack = list(graph.ast_children(node))
    while stack:
        current = stack.pop()
        found.add(current)
        for edge in graph.ast_child_edges(current):
            conditional = (
                graph.kind_of(current) == "ConditionalExpression" and edge.role in ("THEN", "ELSE")
            ) or (
                graph.node(current).properties.get("operator") in BRANCHING_OPERATORS and edge.role == "RHS"
            )
            if not conditional:
                stack.append(edge.dst)
    return {n for n in found if in_eog(graph, n)}


def post_order_violations(graph: Graph) -> list[tuple[int, int]]:
    """(node, descendant) pairs where an expression can run before a descendant."""
    bad = []
    for fn in graph.nodes_by_kind("FunctionDeclaration", include_subkinds=True):
        entry_reach = reachable(graph, fn)
        for node in graph.ast_descendants(fn):
            if node not in entry_reach or node == fn:
                continue
            if not graph.is_a(node, "Expression") or is_branching(graph, node):
                continue
            for desc in unconditional_descendants(graph, node):
                if node in reachable(graph, fn, {desc}):
                    bad.append((node, desc))
    return bad


def branch_totality_violations(graph: Graph) -> list[int]:
    bad = []
    for node in graph.nodes:
        out = graph.out_edges(node, "EOG")
        if len(out) > 1:
            values = [e.branch for e in out]
            if None in values or len(set(values)) != len(values):
                bad.append(node)
    return bad


def for_loop_violations(graph: Graph) -> list[str]:
    """Ordering problems of every for statement, as readable messages."""
    problems = []
    for loop in graph.nodes_by_kind("ForStatement"):
        fn = graph.enclosing(loop, "FunctionDeclaration")
        parts = {role: eog_nodes(graph, graph.ast_child(loop, role)) if graph.ast_child(loop, role) else set()
                 for role in ("INITIALIZER", "CONDITION", "BODY", "ITERATION")}
        init, cond, body, step = (parts[r] for r in ("INITIALIZER", "CONDITION", "BODY", "ITERATION"))
        if init and not precedes_always(graph, fn, init, cond | {loop}):
            problems.append(f"{loop}: condition reachable without initializer")
        if init and not precedes_always(graph, fn, init, body):
            problems.append(f"{loop}: body reachable without initializer")
        if step and not precedes_always(graph, fn, body, step):
            problems.append(f"{loop}: iteration reachable without body")
        targets = {e.branch and str(e.branch): e.dst for e in graph.out_edges(loop, "EOG")}
        if set(targets) != {"true", "false"}:
            problems.append(f"{loop}: branch values {sorted(targets)}")
        elif body and targets["true"] not in body:
            problems.append(f"{loop}: TRUE edge does not enter the body")
        # the loop root sits after the condition
        if cond and not any(e.src in cond for e in graph.in_edges(loop, "EOG")):
            problems.append(f"{loop}: root not preceded by the condition")
        if step and cond and not any(
            e.dst in cond for n in step for e in graph.out_edges(n, "EOG")
        ):
            problems.append(f"{loop}: no back edge from iteration to condition")
    return problems


def crossing_edges(graph: Graph) -> list[tuple[int, int]]:
    """EOG edges whose endpoints lie in different functions."""
    bad = []
    for edge in graph.edges_with_label("EOG"):
        if graph.enclosing(edge.src, "FunctionDeclaration") != graph.enclosing(edge.dst, "FunctionDeclaration"):
            bad.append((edge.src, edge.dst))
    return bad
