"""Data flow edges.

Value dependencies (operands to operators, initializers to declarations,
arguments to parameters, return values to functions to calls) are drawn in
both modes.  How variable values reach their uses depends on the mode:

* DECLARATION_LINK: write reference -> declaration -> every read reference.
* FLOW_SENSITIVE: reaching definitions over the EOG.  The writer of a
  definition is the assigned reference, the initialized declaration, or the
  parameter at function entry; each read gets an edge from every writer whose
  definition reaches it.  Variables declared outside the analysed function
  (globals, inferred variables) additionally keep declaration links, since
  writes to them may happen anywhere.
"""

from __future__ import annotations

import heapq
from collections import deque

from cpg.errors import ConfigurationError
from cpg.graph import EdgeLabel, Graph
from cpg.passes.base import DfgMode, PassContext, is_write, refers_to

Definition = tuple[int, int]  # (declaration, writer)

_VARIABLES = ("VariableDeclaration", "ParameterDeclaration")


class _EdgeSet:
    def __init__(self, graph: Graph) -> None:
        self.graph = graph
        self.seen = {(e.src, e.dst) for e in graph.edges_with_label(EdgeLabel.DFG)}

    def add(self, src: int | None, dst: int | None) -> None:
        if src is None or dst is None or (src, dst) in self.seen:
            return
        graph = self.graph
        if graph.is_a(src, "ProblemNode") or graph.is_a(dst, "ProblemNode"):
            return
        self.seen.add((src, dst))
        graph.add_edge(src, dst, EdgeLabel.DFG)


def _variable_of(graph: Graph, ref: int) -> int | None:
    decl = refers_to(graph, ref)
    if decl is not None and any(graph.is_a(decl, k) for k in _VARIABLES):
        return decl
    return None


def value_edges(graph: Graph, edges: _EdgeSet) -> None:
    child = graph.ast_child
    for node_id in sorted(graph.nodes):
        node = graph.node(node_id)
        kind = node.kind
        if kind == "BinaryOperator":
            lhs, rhs = child(node_id, "LHS"), child(node_id, "RHS")
            if node.properties.get("operator") == "=":
                edges.add(rhs, lhs)
                edges.add(lhs, node_id)
            else:
                edges.add(lhs, node_id)
                edges.add(rhs, node_id)
        elif kind == "UnaryOperator":
            edges.add(child(node_id, "INPUT"), node_id)
        elif kind == "ConditionalExpression":
            edges.add(child(node_id, "THEN"), node_id)
            edges.add(child(node_id, "ELSE"), node_id)
        elif kind in ("MemberExpression", "MemberCallExpression"):
            edges.add(child(node_id, "BASE"), node_id)
        elif kind == "VariableDeclaration":
            edges.add(child(node_id, "INITIALIZER"), node_id)
        elif graph.is_a(node_id, "ReturnStatement"):
            edges.add(child(node_id, "VALUE"), node_id)
            fn = graph.enclosing(node_id, "FunctionDeclaration")
            edges.add(node_id, fn)
        if graph.is_a(node_id, "CallExpression"):
            args = graph.ast_children(node_id, "ARGUMENT")
            for invoke in graph.out_edges(node_id, EdgeLabel.INVOKES):
                edges.add(invoke.dst, node_id)
                params = graph.ast_children(invoke.dst, "PARAMETER")
                for arg, param in zip(args, params):
                    edges.add(arg, param)


def declaration_links(graph: Graph, edges: _EdgeSet, only: set[int] | None = None) -> None:
    """Write ref -> declaration and declaration -> read ref, for ``only`` declarations if given."""
    for ref in graph.nodes_by_kind("DeclaredReferenceExpression", include_subkinds=True):
        decl = _variable_of(graph, ref)
        if decl is None or (only is not None and decl not in only):
            continue
        if is_write(graph, ref):
            edges.add(ref, decl)
        else:
            edges.add(decl, ref)


class ReachingDefinitions:
    """Reaching definitions over the EOG region reachable from ``entry``."""

    def __init__(self, graph: Graph, entry: int, check_monotone: bool = False) -> None:
        self.graph = graph
        self.entry = entry
        self.check_monotone = check_monotone
        self.order = self._region()
        self.position = {n: i for i, n in enumerate(self.order)}
        self.function = entry if graph.is_a(entry, "FunctionDeclaration") else None
        self.outs: dict[int, frozenset[Definition]] = {}
        self.ins: dict[int, frozenset[Definition]] = {}
        self.rounds = 0
        self.visits = 0
        self.monotone = True

    def _region(self) -> list[int]:
        seen = {self.entry}
        order = [self.entry]
        queue = deque(order)
        while queue:
            node = queue.popleft()
            for edge in self.graph.out_edges(node, EdgeLabel.EOG):
                if edge.dst not in seen:
                    seen.add(edge.dst)
                    order.append(edge.dst)
                    queue.append(edge.dst)
        return order

    def _gen_kill(self, node: int) -> tuple[list[Definition], set[int]]:
        graph = self.graph
        if node == self.function:
            params = graph.ast_children(node, "PARAMETER")
            return [(p, p) for p in params], set(params)
        kind = graph.kind_of(node)
        if kind == "VariableDeclaration":
            if graph.ast_child(node, "INITIALIZER") is not None:
                return [(node, node)], {node}
            return [], {node}
        if kind == "BinaryOperator" and graph.node(node).properties.get("operator") == "=":
            lhs = graph.ast_child(node, "LHS")
            if lhs is not None and graph.is_a(lhs, "DeclaredReferenceExpression"):
                decl = _variable_of(graph, lhs)
                if decl is not None:
                    return [(decl, lhs)], {decl}
        return [], set()

    def _transfer(self, node: int, incoming: frozenset[Definition]) -> frozenset[Definition]:
        gen, kill = self._gen_kill(node)
        if not gen and not kill:
            return incoming
        return frozenset(d for d in incoming if d[0] not in kill) | frozenset(gen)

    def solve(self) -> None:
        graph = self.graph
        position = self.position
        preds = {
            n: [e.src for e in graph.in_edges(n, EdgeLabel.EOG) if e.src in position]
            for n in self.order
        }
        succs = {
            n: sorted({e.dst for e in graph.out_edges(n, EdgeLabel.EOG)}, key=position.__getitem__)
            for n in self.order
        }
        empty: frozenset[Definition] = frozenset()
        pending = list(range(len(self.order)))
        while pending:
            # One round walks the worklist in EOG order; updates flowing forward
            # are handled in the same round, back edges defer to the next one.
            self.rounds += 1
            heapq.heapify(pending)
            queued = set(pending)
            next_round: set[int] = set()
            while pending:
                index = heapq.heappop(pending)
                node = self.order[index]
                self.visits += 1
                incoming = empty.union(*(self.outs.get(p, empty) for p in preds[node]))
                self.ins[node] = incoming
                out = self._transfer(node, incoming)
                old = self.outs.get(node)
                if old is not None and out == old:
                    continue
                if old is not None and self.check_monotone and not old <= out:
                    self.monotone = False
                self.outs[node] = out
                for succ in succs[node]:
                    target = position[succ]
                    if target > index:
                        if target not in queued:
                            queued.add(target)
                            heapq.heappush(pending, target)
                    else:
                        next_round.add(target)
            pending = list(next_round)

    def uses(self) -> list[tuple[int, int]]:
        """(writer, read reference) pairs."""
        graph = self.graph
        pairs = []
        for node in self.order:
            if not graph.is_a(node, "DeclaredReferenceExpression") or is_write(graph, node):
                continue
            decl = _variable_of(graph, node)
            if decl is None:
                continue
            for var, writer in sorted(self.ins.get(node, ())):
                if var == decl:
                    pairs.append((writer, node))
        return pairs


def _is_local(graph: Graph, decl: int) -> bool:
    return graph.enclosing(decl, "FunctionDeclaration") is not None


def flow_sensitive(ctx: PassContext, edges: _EdgeSet, check_monotone: bool = False) -> None:
    graph = ctx.graph
    entries = [
        fn for fn in graph.nodes_by_kind("FunctionDeclaration", include_subkinds=True)
        if graph.out_edges(fn, EdgeLabel.EOG)
    ] + [
        tu for tu in graph.nodes_by_kind("TranslationUnitDeclaration")
        if graph.out_edges(tu, EdgeLabel.EOG)
    ]
    rounds: list[int] = []
    monotone = True
    for entry in sorted(entries):
        solver = ReachingDefinitions(graph, entry, check_monotone)
        solver.solve()
        rounds.append(solver.rounds)
        monotone = monotone and solver.monotone
        for writer, read in solver.uses():
            edges.add(writer, read)
        ctx.stats.setdefault("dfg_regions", []).append(  # type: ignore[union-attr]
            {"entry": entry, "nodes": len(solver.order), "rounds": solver.rounds,
             "visits": solver.visits, "monotone": solver.monotone}
        )
    ctx.stats["dfg_max_rounds"] = max(rounds, default=0)
    ctx.stats["dfg_monotone"] = monotone
    non_local = {
        decl
        for kind in _VARIABLES
        for decl in graph.nodes_by_kind(kind)
        if not _is_local(graph, decl)
    }
    declaration_links(graph, edges, only=non_local)


def dfg_pass(ctx: PassContext, check_monotone: bool = False) -> None:
    graph = ctx.graph
    edges = _EdgeSet(graph)
    value_edges(graph, edges)
    if ctx.dfg_mode is DfgMode.FLOW_SENSITIVE:
        if "eog" not in ctx.completed:
            raise ConfigurationError("flow-sensitive data flow requires the eog pass to run first")
        flow_sensitive(ctx, edges, check_monotone)
    else:
        declaration_links(graph, edges)
    graph.meta["dfg_mode"] = ctx.dfg_mode
