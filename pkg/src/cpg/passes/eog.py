"""Evaluation order graph construction.

Expressions are connected in post-order (operands left to right, then the
operator).  Branching constructs are connected after their branching
expression and before their targets, and the edges to the targets carry a
:class:`~cpg.graph.BranchValue`.  Compound statements are transparent: they
never appear in the EOG themselves.  Each function body is processed on its
own, starting at the FunctionDeclaration node; the set of nodes that leave the
function is stored in the ``eogExits`` property as comma-separated ids.
Top-level variable initializers of a translation unit are chained the same way,
starting at the TranslationUnitDeclaration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from cpg.graph import FALSE, TRUE, BranchValue, EdgeLabel, Graph
from cpg.passes.base import PassContext

Pred = tuple[int, "BranchValue | None"]

# Declarations that are not evaluated where they appear.
_NOT_EVALUATED = ("FunctionDeclaration", "RecordDeclaration", "NamespaceDeclaration",
                  "FieldDeclaration", "TypeNode")


@dataclass
class _LoopFrame:
    loop: int
    head: int | None = None  # where back edges and anchor-less continues go
    continue_anchor: int | None = None
    breaks: list[Pred] = field(default_factory=list)
    continues: list[Pred] = field(default_factory=list)


class EogBuilder:
    def __init__(self, graph: Graph, ctx: PassContext | None = None) -> None:
        self.graph = graph
        self.ctx = ctx
        self.preds: list[Pred] = []
        self.order: list[int] = []
        self.entry: dict[int, int] = {}
        self.loops: list[_LoopFrame] = []
        self.exits: list[int] = []
        self._handlers: list[tuple[str, Callable[[int], None]]] = [
            ("CompoundStatement", self.compound),
            ("IfStatement", self.if_statement),
            ("WhileStatement", self.while_statement),
            ("DoStatement", self.do_statement),
            ("ForStatement", self.for_statement),
            ("ReturnStatement", self.return_statement),
            ("BreakStatement", self.jump),
            ("ContinueStatement", self.jump),
            ("ConditionalExpression", self.conditional),
            ("BinaryOperator", self.binary),
            ("ProblemNode", self.push),
        ]

    # -- primitives -------------------------------------------------------------

    def connect(self, preds: list[Pred], target: int) -> None:
        for src, branch in preds:
            self.graph.add_edge(src, target, EdgeLabel.EOG, branch=branch)

    def push(self, node: int) -> None:
        self.connect(self.preds, node)
        self.preds = [(node, None)]
        self.order.append(node)

    def visit(self, node: int) -> None:
        graph = self.graph
        if any(graph.is_a(node, k) for k in _NOT_EVALUATED):
            return
        mark = len(self.order)
        kind = graph.kind_of(node)
        for handled_kind, handler in self._handlers:
            if graph.taxonomy.is_subkind(kind, handled_kind):
                handler(node)
                break
        else:
            self.post_order(node)
        if len(self.order) > mark:
            self.entry[node] = self.order[mark]

    def post_order(self, node: int) -> None:
        for child in self.graph.ast_children(node):
            self.visit(child)
        self.push(node)

    # -- roots ---------------------------------------------------------------------

    def function(self, fn: int) -> None:
        self.preds = []
        self.push(fn)
        body = self.graph.ast_child(fn, "BODY")
        if body is not None:
            self.visit(body)
        exits = self.exits + [src for src, _ in self.preds]
        self.graph.set_property(fn, "eogExits", ",".join(str(e) for e in dict.fromkeys(exits)))

    def unit(self, tu: int) -> None:
        initializers = [
            child for child in self.graph.ast_children(tu)
            if self.graph.kind_of(child) == "VariableDeclaration"
            and self.graph.ast_child(child, "INITIALIZER") is not None
        ]
        if not initializers:
            return
        self.preds = []
        self.push(tu)
        for decl in initializers:
            self.visit(decl)

    # -- statements ------------------------------------------------------------------

    def compound(self, node: int) -> None:
        for child in self.graph.ast_children(node):
            self.visit(child)

    def if_statement(self, node: int) -> None:
        cond = self.graph.ast_child(node, "CONDITION")
        then = self.graph.ast_child(node, "THEN")
        other = self.graph.ast_child(node, "ELSE")
        if cond is not None:
            self.visit(cond)
        self.push(node)
        self.preds = [(node, TRUE)]
        if then is not None:
            self.visit(then)
        then_exits = self.preds
        self.preds = [(node, FALSE)]
        if other is not None:
            self.visit(other)
        self.preds = then_exits + self.preds

    def _continue_anchor(self, loop: int) -> int:
        graph = self.graph
        return (graph.ast_child(loop, "ITERATION") or graph.ast_child(loop, "CONDITION") or loop)

    def _close_loop(self, frame: _LoopFrame) -> None:
        self.loops.pop()
        anchor = frame.continue_anchor
        target = frame.head
        if anchor is not None and anchor != frame.loop and anchor in self.entry:
            target = self.entry[anchor]
        if target is not None:
            self.connect(frame.continues, target)
        self.preds = self.preds + frame.breaks

    def while_statement(self, node: int) -> None:
        frame = _LoopFrame(node, continue_anchor=self._continue_anchor(node))
        cond = self.graph.ast_child(node, "CONDITION")
        body = self.graph.ast_child(node, "BODY")
        mark = len(self.order)
        if cond is not None:
            self.visit(cond)
        self.push(node)
        frame.head = self.order[mark]
        self.loops.append(frame)
        self.preds = [(node, TRUE)]
        if body is not None:
            self.visit(body)
        self.connect(self.preds, frame.head)
        self.preds = [(node, FALSE)]
        self._close_loop(frame)

    def do_statement(self, node: int) -> None:
        frame = _LoopFrame(node, continue_anchor=self._continue_anchor(node))
        body = self.graph.ast_child(node, "BODY")
        cond = self.graph.ast_child(node, "CONDITION")
        self.loops.append(frame)
        mark = len(self.order)
        if body is not None:
            self.visit(body)
        preds_after_body = self.preds
        if len(self.order) == mark:
            body_entry = None
        else:
            body_entry = self.order[mark]
        # continues jump to the condition, which is evaluated next
        self.preds = preds_after_body + frame.continues
        frame.continues = []
        if cond is not None:
            self.visit(cond)
        self.push(node)
        frame.head = body_entry if body_entry is not None else node
        self.connect([(node, TRUE)], frame.head)
        self.preds = [(node, FALSE)]
        self._close_loop(frame)

    def for_statement(self, node: int) -> None:
        graph = self.graph
        init = graph.ast_child(node, "INITIALIZER")
        cond = graph.ast_child(node, "CONDITION")
        iteration = graph.ast_child(node, "ITERATION")
        body = graph.ast_child(node, "BODY")
        frame = _LoopFrame(node, continue_anchor=self._continue_anchor(node))
        if init is not None:
            self.visit(init)
        mark = len(self.order)
        if cond is not None:
            self.visit(cond)
        self.push(node)
        frame.head = self.order[mark]
        self.loops.append(frame)
        self.preds = [(node, TRUE)]
        if body is not None:
            self.visit(body)
        if iteration is not None:
            self.preds = self.preds + frame.continues
            frame.continues = []
            self.visit(iteration)
        self.connect(self.preds, frame.head)
        self.preds = [(node, FALSE)] if cond is not None else []
        self._close_loop(frame)

    def return_statement(self, node: int) -> None:
        value = self.graph.ast_child(node, "VALUE")
        if value is not None:
            self.visit(value)
        self.push(node)
        self.exits.append(node)
        self.preds = []

    def _frame_for(self, node: int, kind: str) -> _LoopFrame | None:
        if not self.loops:
            return None
        tree = self.ctx.tree_of(node) if self.ctx is not None else None
        scope = tree.scope_of(node) if tree is not None else None
        if tree is None or scope is None:
            return self.loops[-1]
        anchor = tree.jump_target(kind, scope)
        for frame in reversed(self.loops):
            if (kind == "break" and frame.loop == anchor) or (
                kind == "continue" and frame.continue_anchor == anchor
            ):
                return frame
        return None

    def jump(self, node: int) -> None:
        kind = "break" if self.graph.is_a(node, "BreakStatement") else "continue"
        self.push(node)
        frame = self._frame_for(node, kind)
        if frame is None:
            if self.ctx is not None:
                self.ctx.warn(f"{kind} outside of a loop", node)
        elif kind == "break":
            frame.breaks.extend(self.preds)
        else:
            frame.continues.extend(self.preds)
        self.preds = []

    # -- expressions ------------------------------------------------------------------

    def conditional(self, node: int) -> None:
        cond = self.graph.ast_child(node, "CONDITION")
        then = self.graph.ast_child(node, "THEN")
        other = self.graph.ast_child(node, "ELSE")
        if cond is not None:
            self.visit(cond)
        self.push(node)
        self.preds = [(node, TRUE)]
        if then is not None:
            self.visit(then)
        then_exits = self.preds
        self.preds = [(node, FALSE)]
        if other is not None:
            self.visit(other)
        self.preds = then_exits + self.preds

    def binary(self, node: int) -> None:
        op = self.graph.node(node).properties.get("operator")
        if op not in ("&&", "||"):
            self.post_order(node)
            return
        lhs = self.graph.ast_child(node, "LHS")
        rhs = self.graph.ast_child(node, "RHS")
        if lhs is not None:
            self.visit(lhs)
        self.push(node)
        # `a && b` evaluates b only when a is true; `a || b` only when a is false.
        evaluate_rhs, skip = (TRUE, FALSE) if op == "&&" else (FALSE, TRUE)
        self.preds = [(node, evaluate_rhs)]
        if rhs is not None:
            self.visit(rhs)
        self.preds = self.preds + [(node, skip)]


def eog_pass(ctx: PassContext) -> None:
    graph = ctx.graph
    for fn in graph.nodes_by_kind("FunctionDeclaration", include_subkinds=True):
        if graph.ast_child(fn, "BODY") is None or graph.out_edges(fn, EdgeLabel.EOG):
            continue
        EogBuilder(graph, ctx).function(fn)
    for tu in graph.nodes_by_kind("TranslationUnitDeclaration"):
        if not graph.out_edges(tu, EdgeLabel.EOG):
            EogBuilder(graph, ctx).unit(tu)


def function_exits(graph: Graph, fn: int) -> list[int]:
    raw = graph.node(fn).properties.get("eogExits")
    if not isinstance(raw, str) or not raw:
        return []
    return [int(part) for part in raw.split(",")]
