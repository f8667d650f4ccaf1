"""Translation of C-subset syntax trees into the language-independent AST."""

from __future__ import annotations

import bisect
from typing import Callable

from cpg.frontends.base import TranslationResult, coverage_tree
from cpg.frontends.c.parser import Parser, Syntax
from cpg.graph import EdgeLabel, Flag, Graph, SourceLocation
from cpg.scopes import Diagnostic, ScopeKind, ScopeManager

LANGUAGE = "C"


class LineIndex:
    """Maps source offsets to 1-based (line, column) pairs."""

    def __init__(self, source: str) -> None:
        self.starts = [0]
        for i, ch in enumerate(source):
            if ch == "\n":
                self.starts.append(i + 1)

    def position(self, offset: int) -> tuple[int, int]:
        line = bisect.bisect_right(self.starts, offset) - 1
        return line + 1, offset - self.starts[line] + 1


class Translator:
    def __init__(self, graph: Graph, source: str, path: str) -> None:
        self.graph = graph
        self.source = source
        self.path = path
        self.lines = LineIndex(source)
        self.scopes: ScopeManager | None = None
        self._handlers: dict[str, Callable[[Syntax], int | None]] = {
            "function": self.function,
            "var": self.variable,
            "struct": self.record,
            "block": self.block,
            "decl_stmt": self.declaration_statement,
            "if": self.if_statement,
            "while": self.while_statement,
            "do": self.do_statement,
            "for": self.for_statement,
            "return": self.return_statement,
            "break": self.jump,
            "continue": self.jump,
            "expr_stmt": self.expression_statement,
            "empty": lambda syntax: None,
            "error": self.problem,
            "int": self.literal,
            "char": self.literal,
            "string": self.literal,
            "null": self.literal,
            "ident": self.reference,
            "binary": self.binary,
            "unary": self.unary,
            "ternary": self.conditional,
            "call": self.call,
            "member": self.member,
            "member_call": self.member_call,
        }

    # -- helpers ------------------------------------------------------------

    def location(self, syntax: Syntax) -> SourceLocation:
        start_line, start_col = self.lines.position(syntax.start)
        end_line, end_col = self.lines.position(syntax.end)
        return SourceLocation(self.path, start_line, start_col, end_line, end_col)

    def new(self, kind: str, syntax: Syntax, name: str | None = None, **props) -> int:
        node = self.graph.add_node(
            kind, name, self.location(syntax),
            code=self.source[syntax.start:syntax.end],
            properties=props,
        )
        assert self.scopes is not None
        self.scopes.record(node)
        return node

    def attach(self, parent: int, child: int | None, role: str, index: int) -> None:
        if child is not None:
            self.graph.add_edge(parent, child, EdgeLabel.AST, role=role, index=index)

    def visit(self, syntax: Syntax) -> int | None:
        handler = self._handlers.get(syntax.kind)
        if handler is None:
            return self.unhandled(syntax)
        return handler(syntax)

    # -- declarations ---------------------------------------------------------

    def unit(self, syntax: Syntax) -> int:
        tu = self.graph.add_node(
            "TranslationUnitDeclaration", self.path, self.location(syntax),
            code=self.source, properties={"language": LANGUAGE},
        )
        self.scopes = ScopeManager(tu)
        self.scopes.record(tu)
        index = 0
        for _, child in syntax.children:
            node = self.visit(child)
            if node is not None:
                self.attach(tu, node, "DECLARATION", index)
                index += 1
        return tu

    def function(self, syntax: Syntax) -> int:
        assert self.scopes is not None
        fn = self.new("FunctionDeclaration", syntax, syntax.attrs["name"],
                      returnType=syntax.attrs["return_type"], hasBody=syntax.attrs["has_body"])
        self.scopes.declare(syntax.attrs["name"], fn)
        self.scopes.enter_scope(ScopeKind.FUNCTION, fn)
        params = syntax.all("param")
        for i, param in enumerate(params):
            p = self.new("ParameterDeclaration", param, param.attrs["name"], type=param.attrs["type"])
            if param.attrs["name"] is not None:
                self.scopes.declare(param.attrs["name"], p)
            self.attach(fn, p, "PARAMETER", i)
        body = syntax.child("body")
        if body is not None:
            self.attach(fn, self.block(body), "BODY", len(params))
        self.scopes.leave_scope()
        return fn

    def variable(self, syntax: Syntax) -> int:
        assert self.scopes is not None
        var = self.new("VariableDeclaration", syntax, syntax.attrs["name"], type=syntax.attrs["type"])
        init = syntax.child("init")
        if init is not None:
            self.attach(var, self.visit(init), "INITIALIZER", 0)
        self.scopes.declare(syntax.attrs["name"], var)
        return var

    def record(self, syntax: Syntax) -> int:
        assert self.scopes is not None
        rec = self.new("RecordDeclaration", syntax, syntax.attrs["name"], recordKind="struct")
        self.scopes.declare(syntax.attrs["name"], rec)
        self.scopes.enter_scope(ScopeKind.RECORD, rec)
        for i, field in enumerate(syntax.all("field")):
            f = self.new("FieldDeclaration", field, field.attrs["name"], type=field.attrs["type"])
            self.scopes.declare(field.attrs["name"], f)
            self.attach(rec, f, "FIELD", i)
        self.scopes.leave_scope()
        return rec

    # -- statements -------------------------------------------------------------

    def block(self, syntax: Syntax) -> int:
        assert self.scopes is not None
        node = self.new("CompoundStatement", syntax)
        self.scopes.enter_scope(ScopeKind.BLOCK, node)
        index = 0
        for _, stmt in syntax.children:
            child = self.visit(stmt)
            if child is not None:
                self.attach(node, child, "STATEMENT", index)
                index += 1
        self.scopes.leave_scope()
        return node

    def declaration_statement(self, syntax: Syntax) -> int:
        node = self.new("DeclarationStatement", syntax)
        for i, decl in enumerate(syntax.all("decl")):
            self.attach(node, self.variable(decl), "DECLARATION", i)
        return node

    def if_statement(self, syntax: Syntax) -> int:
        node = self.new("IfStatement", syntax)
        index = 0
        for role, child in syntax.children:
            target = {"cond": "CONDITION", "then": "THEN", "else": "ELSE"}[role]
            sub = self.visit(child)
            if sub is not None:
                self.attach(node, sub, target, index)
                index += 1
        return node

    def _loop(self, kind: str, syntax: Syntax, roles: dict[str, str]) -> int:
        assert self.scopes is not None
        node = self.new(kind, syntax)
        self.scopes.enter_scope(ScopeKind.LOOP, node)
        translated: dict[str, int] = {}
        index = 0
        for role, child in syntax.children:
            sub = self.visit(child)
            if sub is not None:
                self.attach(node, sub, roles[role], index)
                translated[roles[role]] = sub
                index += 1
        continue_target = translated.get("ITERATION", translated.get("CONDITION", node))
        self.scopes.set_jump_targets(node, continue_target)
        self.scopes.leave_scope()
        return node

    def while_statement(self, syntax: Syntax) -> int:
        return self._loop("WhileStatement", syntax, {"cond": "CONDITION", "body": "BODY"})

    def do_statement(self, syntax: Syntax) -> int:
        return self._loop("DoStatement", syntax, {"body": "BODY", "cond": "CONDITION"})

    def for_statement(self, syntax: Syntax) -> int:
        return self._loop("ForStatement", syntax, {
            "init": "INITIALIZER", "cond": "CONDITION", "iter": "ITERATION", "body": "BODY",
        })

    def return_statement(self, syntax: Syntax) -> int:
        node = self.new("ReturnStatement", syntax)
        value = syntax.child("value")
        if value is not None:
            self.attach(node, self.visit(value), "VALUE", 0)
        return node

    def jump(self, syntax: Syntax) -> int:
        kind = "BreakStatement" if syntax.kind == "break" else "ContinueStatement"
        return self.new(kind, syntax)

    def expression_statement(self, syntax: Syntax) -> int | None:
        expr = syntax.child("expr")
        assert expr is not None
        return self.visit(expr)

    def problem(self, syntax: Syntax) -> int:
        return self.new("ProblemNode", syntax, problemType="PARSE", message=syntax.attrs.get("message"))

    def unhandled(self, syntax: Syntax) -> int:
        return self.new("ProblemNode", syntax, problemType="UNHANDLED",
                        message=f"no handler for {syntax.kind!r}")

    # -- expressions -------------------------------------------------------------

    _LITERAL_TYPES = {"int": "int", "char": "char", "string": "char*", "null": "void*"}

    def literal(self, syntax: Syntax) -> int:
        return self.new("Literal", syntax, value=syntax.attrs["value"],
                        type=self._LITERAL_TYPES[syntax.kind])

    def reference(self, syntax: Syntax) -> int:
        return self.new("DeclaredReferenceExpression", syntax, syntax.attrs["name"])

    def binary(self, syntax: Syntax) -> int:
        node = self.new("BinaryOperator", syntax, operator=syntax.attrs["op"])
        self.attach(node, self.visit(syntax.children[0][1]), "LHS", 0)
        self.attach(node, self.visit(syntax.children[1][1]), "RHS", 1)
        return node

    def unary(self, syntax: Syntax) -> int:
        node = self.new("UnaryOperator", syntax, operator=syntax.attrs["op"])
        self.attach(node, self.visit(syntax.children[0][1]), "INPUT", 0)
        return node

    def conditional(self, syntax: Syntax) -> int:
        node = self.new("ConditionalExpression", syntax)
        for index, (role, child) in enumerate(syntax.children):
            target = {"cond": "CONDITION", "then": "THEN", "else": "ELSE"}[role]
            self.attach(node, self.visit(child), target, index)
        return node

    def call(self, syntax: Syntax) -> int:
        node = self.new("CallExpression", syntax, syntax.attrs["name"])
        for i, arg in enumerate(syntax.all("arg")):
            self.attach(node, self.visit(arg), "ARGUMENT", i)
        return node

    def member(self, syntax: Syntax) -> int:
        node = self.new("MemberExpression", syntax, syntax.attrs["name"], operator=syntax.attrs["op"])
        self.attach(node, self.visit(syntax.children[0][1]), "BASE", 0)
        return node

    def member_call(self, syntax: Syntax) -> int:
        node = self.new("MemberCallExpression", syntax, syntax.attrs["name"], operator=syntax.attrs["op"])
        base = syntax.child("base")
        assert base is not None
        self.attach(node, self.visit(base), "BASE", 0)
        for i, arg in enumerate(syntax.all("arg")):
            self.attach(node, self.visit(arg), "ARGUMENT", i)
        return node


def translate(graph: Graph, syntax: Syntax, source: str, path: str,
              parse_errors=()) -> TranslationResult:
    translator = Translator(graph, source, path)
    root = translator.unit(syntax)
    assert translator.scopes is not None
    tree = translator.scopes.tree
    diagnostics = [Diagnostic(f"syntax error: {err}") for err in parse_errors]
    return TranslationResult(
        file=path,
        language=LANGUAGE,
        root=root,
        scope_tree=tree,
        coverage_raw=coverage_tree(graph, root),
        source=source,
        diagnostics=diagnostics,
    )


def _always_returns(graph: Graph, stmt: int) -> bool:
    kind = graph.kind_of(stmt)
    if kind == "ReturnStatement":
        return True
    if kind == "CompoundStatement":
        children = graph.ast_children(stmt)
        return bool(children) and _always_returns(graph, children[-1])
    if kind == "IfStatement":
        then = graph.ast_child(stmt, "THEN")
        other = graph.ast_child(stmt, "ELSE")
        return (then is not None and other is not None
                and _always_returns(graph, then) and _always_returns(graph, other))
    return False


def insert_implicit(graph: Graph, result: TranslationResult) -> TranslationResult:
    """Append an IMPLICIT ``return`` to void functions that can fall off their end.

    The C subset has no ``this``; only missing returns are made explicit.
    Non-void functions are left alone so analyses can still flag them.
    """
    for decl in graph.ast_children(result.root):
        if not graph.is_a(decl, "FunctionDeclaration"):
            continue
        if graph.node(decl).properties.get("returnType") != "void":
            continue
        body = graph.ast_child(decl, "BODY")
        if body is None or _always_returns(graph, body):
            continue
        edges = graph.ast_child_edges(body)
        next_index = max((e.index for e in edges if e.index is not None), default=-1) + 1
        ret = graph.add_node("ReturnStatement", flags={Flag.IMPLICIT})
        graph.add_edge(body, ret, EdgeLabel.AST, role="STATEMENT", index=next_index)
        block_scope = result.scope_tree.scope_for_node(body, ScopeKind.BLOCK)
        if block_scope is not None:
            result.scope_tree.node_scopes[ret] = block_scope.id
    return result


def translate_source(graph: Graph, source: str, path: str) -> TranslationResult:
    """Parse, translate and add implicit nodes for one C file."""
    parser = Parser(source)
    syntax = parser.parse_unit()
    result = translate(graph, syntax, source, path, parser.errors)
    return insert_implicit(graph, result)
