"""Creates INFERRED declarations for calls and references that did not resolve.

Inferred declarations live under a synthetic translation unit (flagged
INFERRED, without location) whose global scope joins the other scope trees,
so later resolution sees them like any other global declaration.
"""

from __future__ import annotations

from cpg.graph import EdgeLabel, Flag, Graph
from cpg.passes.base import UNKNOWN_TYPE, PassContext, refers_to
from cpg.passes.calls import argument_types
from cpg.scopes import ScopeManager, ScopeTree

INFERRED_UNIT_NAME = "<inferred>"


class _InferredUnit:
    def __init__(self, ctx: PassContext) -> None:
        self.graph = ctx.graph
        graph = ctx.graph
        existing = [
            n for n in graph.nodes_by_kind("TranslationUnitDeclaration")
            if graph.node(n).inferred
        ]
        if existing:
            self.root = existing[0]
            tree = next((t for t in ctx.scope_trees if t.global_scope.ast_node == self.root), None)
        else:
            self.root = graph.add_node("TranslationUnitDeclaration", INFERRED_UNIT_NAME,
                                       flags={Flag.INFERRED})
            tree = None
        if tree is None:
            manager = ScopeManager(self.root)
            tree = manager.tree
            ctx.add_tree(tree)
        self.tree: ScopeTree = tree
        self.ctx = ctx
        self.functions: dict[tuple[str, str, int], int] = {}
        self.variables: dict[str, int] = {}
        for child in graph.ast_children(self.root):
            node = graph.node(child)
            if graph.is_a(child, "FunctionDeclaration"):
                arity = len(graph.ast_children(child, "PARAMETER"))
                self.functions[(node.kind, node.name or "", arity)] = child
            elif node.kind == "VariableDeclaration":
                self.variables[node.name or ""] = child
            else:
                continue
            self.tree.node_scopes.setdefault(child, self.tree.root)
            self._declare(node.name or "", child)
        ctx.invalidate_index()

    def _attach(self, child: int) -> None:
        graph = self.graph
        index = len(graph.ast_children(self.root))
        graph.add_edge(self.root, child, EdgeLabel.AST, role="DECLARATION", index=index)
        self.tree.node_scopes[child] = self.tree.root
        self.ctx.invalidate_index()

    def _declare(self, name: str, node: int) -> None:
        self.tree.global_scope.declarations.setdefault(name, node)

    def function(self, call: int) -> int:
        graph = self.graph
        name = graph.node(call).name or ""
        kind = "MethodDeclaration" if graph.is_a(call, "MemberCallExpression") else "FunctionDeclaration"
        types = argument_types(graph, call)
        key = (kind, name, len(types))
        if key in self.functions:
            return self.functions[key]
        fn = graph.add_node(kind, name, flags={Flag.INFERRED},
                            properties={"returnType": UNKNOWN_TYPE, "hasBody": False})
        self._attach(fn)
        for i, arg_type in enumerate(types):
            param = graph.add_node("ParameterDeclaration", f"arg{i}", flags={Flag.INFERRED},
                                   properties={"type": arg_type or UNKNOWN_TYPE})
            graph.add_edge(fn, param, EdgeLabel.AST, role="PARAMETER", index=i)
        self._declare(name, fn)
        self.functions[key] = fn
        return fn

    def variable(self, ref: int) -> int:
        graph = self.graph
        name = graph.node(ref).name or ""
        if name in self.variables:
            return self.variables[name]
        var = graph.add_node("VariableDeclaration", name, flags={Flag.INFERRED},
                             properties={"type": UNKNOWN_TYPE})
        self._attach(var)
        self._declare(name, var)
        self.variables[name] = var
        return var


def _graph_has_work(graph: Graph) -> bool:
    for call in graph.nodes_by_kind("CallExpression", include_subkinds=True):
        if not graph.out_edges(call, EdgeLabel.INVOKES):
            return True
    for ref in graph.nodes_by_kind("DeclaredReferenceExpression", include_subkinds=True):
        if refers_to(graph, ref) is None:
            return True
    return False


def inference_pass(ctx: PassContext) -> None:
    graph = ctx.graph
    if not _graph_has_work(graph):
        return
    unit = _InferredUnit(ctx)
    for call in graph.nodes_by_kind("CallExpression", include_subkinds=True):
        if graph.out_edges(call, EdgeLabel.INVOKES):
            continue
        graph.add_edge(call, unit.function(call), EdgeLabel.INVOKES)
    for ref in graph.nodes_by_kind("DeclaredReferenceExpression", include_subkinds=True):
        if refers_to(graph, ref) is not None:
            continue
        # A bare function name used as a value may match an inferred function.
        target = ctx.resolve(graph.node(ref).name or "", ref)
        if target is None:
            target = unit.variable(ref)
        graph.add_edge(ref, target, EdgeLabel.REFERS_TO)
