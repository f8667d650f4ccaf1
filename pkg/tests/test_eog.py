from __future__ import annotations

import pytest

from cpg.analysis import analyze, analyze_text
from cpg.passes import function_exits
from conftest import eog_succ, find, one
from eog_checks import (
    branch_totality_violations, crossing_edges, for_loop_violations, post_order_violations, reachable,
)

import programs


def graph_of(source: str):
    return analyze_text(source, dfg_mode="decl").graph


def branches(graph, node) -> dict[str, int]:
    return {str(e.branch): e.dst for e in graph.out_edges(node, "EOG")}


def test_binary_operator_post_order():
    g = graph_of(programs.BINARY_EXAMPLE)
    ref = one(g, "DeclaredReferenceExpression", "a")
    lit = one(g, "Literal")
    plus = one(g, "BinaryOperator", operator="+")
    assert eog_succ(g, ref) == [lit]
    assert eog_succ(g, lit) == [plus]
    assert eog_succ(g, one(g, "FunctionDeclaration", "f")) == [ref]


def test_ternary_branches():
    g = graph_of(programs.TERNARY_EXAMPLE)
    cond = one(g, "ConditionalExpression")
    compare = one(g, "BinaryOperator", operator=">")
    then_ref = g.ast_child(cond, "THEN")
    else_lit = g.ast_child(cond, "ELSE")
    assert eog_succ(g, compare) == [cond]
    assert branches(g, cond) == {"true": then_ref, "false": else_lit}
    ret = one(g, "ReturnStatement")
    assert eog_succ(g, then_ref) == eog_succ(g, else_lit) == [ret]


def test_while_loop():
    g = graph_of("void f(int c, int b) { while (c) { b; } }")
    loop = one(g, "WhileStatement")
    c = g.ast_child(loop, "CONDITION")
    b = one(g, "DeclaredReferenceExpression", "b")
    assert eog_succ(g, c) == [loop]
    out = branches(g, loop)
    assert out["true"] == b
    assert eog_succ(g, b) == [c]
    assert g.kind_of(out["false"]) == "ReturnStatement"


def test_do_while_runs_body_first():
    g = graph_of("void f(int c) { do { c = c - 1; } while (c); }")
    fn = one(g, "FunctionDeclaration", "f")
    loop = one(g, "DoStatement")
    body_first = g.ast_child(one(g, "BinaryOperator", operator="="), "LHS")
    assert eog_succ(g, fn) == [body_first]
    assert branches(g, loop)["true"] == body_first


def test_if_without_else_falls_through():
    g = graph_of("int f(int c) { int x = 0; if (c) x = 1; return x; }")
    stmt = one(g, "IfStatement")
    out = branches(g, stmt)
    assert g.kind_of(out["true"]) == "DeclaredReferenceExpression"
    assert g.kind_of(out["false"]) == "DeclaredReferenceExpression"
    assert g.ast_parent(out["false"]) == one(g, "ReturnStatement")


@pytest.mark.parametrize("op, rhs_branch, skip_branch", [("&&", "true", "false"), ("||", "false", "true")])
def test_short_circuit(op, rhs_branch, skip_branch):
    g = graph_of(f"int f(int a, int b) {{ return a {op} b; }}")
    node = one(g, "BinaryOperator", operator=op)
    lhs, rhs = g.ast_child(node, "LHS"), g.ast_child(node, "RHS")
    assert eog_succ(g, lhs) == [node]
    out = branches(g, node)
    assert out[rhs_branch] == rhs
    assert g.kind_of(out[skip_branch]) == "ReturnStatement"


@pytest.mark.parametrize("name", sorted(programs.FOR_LOOPS))
def test_for_loop_order(name):
    g = graph_of(programs.FOR_LOOPS[name])
    assert g.nodes_by_kind("ForStatement")
    assert for_loop_violations(g) == []


def test_for_loop_exact_order():
    g = graph_of(programs.FOR_LOOPS["counting"])
    loop = one(g, "ForStatement")
    init = g.ast_child(loop, "INITIALIZER")
    cond = g.ast_child(loop, "CONDITION")
    step = g.ast_child(loop, "ITERATION")
    cond_first = g.ast_child(cond, "LHS")
    assert eog_succ(g, init) == [cond_first]
    assert eog_succ(g, cond) == [loop]
    body_first = branches(g, loop)["true"]
    assert g.ast_parent(body_first) == g.ast_children(g.ast_child(loop, "BODY"))[0]
    assert eog_succ(g, step) == [cond_first]


def test_break_and_continue_targets():
    g = graph_of(programs.FOR_LOOPS["continue_break"])
    loop = one(g, "ForStatement")
    step_first = g.ast_child(g.ast_child(loop, "ITERATION"), "LHS")
    after_loop = one(g, "ReturnStatement")
    [cont] = find(g, "ContinueStatement")
    [brk] = find(g, "BreakStatement")
    assert eog_succ(g, cont) == [step_first]
    ret_value = g.ast_child(after_loop, "VALUE")
    assert eog_succ(g, brk) == [ret_value]
    assert ret_value in eog_succ(g, loop) or branches(g, loop)["false"] == ret_value


def test_nested_continue_uses_inner_loop():
    g = graph_of("void f(int n) {\n  while (n) {\n    while (n > 1) { continue; }\n    n = n - 1;\n  }\n}\n")
    outer, inner = sorted(find(g, "WhileStatement"))
    [cont] = find(g, "ContinueStatement")
    inner_cond_first = g.ast_child(g.ast_child(inner, "CONDITION"), "LHS")
    assert eog_succ(g, cont) == [inner_cond_first]


def test_statements_after_return_are_unreachable():
    g = graph_of("int f(int a) { return a; a = 2; }")
    assign = one(g, "BinaryOperator", operator="=")
    lhs = g.ast_child(assign, "LHS")
    assert g.in_edges(lhs, "EOG") == []
    fn = one(g, "FunctionDeclaration", "f")
    assert assign not in reachable(g, fn)


def test_return_is_an_exit():
    g = graph_of("int f(int a) { if (a) return 1; return 2; }")
    fn = one(g, "FunctionDeclaration", "f")
    assert sorted(function_exits(g, fn)) == sorted(find(g, "ReturnStatement"))
    for ret in find(g, "ReturnStatement"):
        assert g.out_edges(ret, "EOG") == []


def test_break_outside_loop_warns():
    a = analyze_text("void f(void) { break; }")
    assert any("break" in str(d) for d in a.context.diagnostics)


def test_problem_node_is_opaque():
    g = graph_of("int f(int x) {\n  x = 1;\n  switch (x) { }\n  return x;\n}\n")
    problem = one(g, "ProblemNode")
    assert len(g.in_edges(problem, "EOG")) == 1
    assert len(g.out_edges(problem, "EOG")) == 1
    assert g.ast_children(problem) == []


def test_global_initializers_chain_from_unit():
    g = graph_of("int a = 1;\nint b;\nint c = 2;\n")
    tu = one(g, "TranslationUnitDeclaration")
    reach = reachable(g, tu)
    assert one(g, "VariableDeclaration", "a") in reach
    assert one(g, "VariableDeclaration", "c") in reach
    assert one(g, "VariableDeclaration", "b") not in reach


SOURCES = [programs.TERNARY_EXAMPLE, programs.NESTED_LOOPS, programs.NULL_MIXED, programs.MEMBER_CALL,
           *programs.FOR_LOOPS.values(),
           "int f(int a, int b) { return (a && b) + (a || b ? a : b) + g(a > 0 && b, a); }"]


@pytest.mark.parametrize("source", SOURCES)
def test_eog_invariants(source):
    g = graph_of(source)
    assert branch_totality_violations(g) == []
    assert post_order_violations(g) == []
    assert crossing_edges(g) == []


def test_eog_invariants_on_corpus(corpus_dir):
    g = analyze([corpus_dir], dfg_mode="decl").graph
    assert branch_totality_violations(g) == []
    assert crossing_edges(g) == []
    assert for_loop_violations(g) == []
    assert post_order_violations(g) == []


def test_existing_eog_not_rebuilt():
    a = analyze_text(programs.TERNARY_EXAMPLE)
    from cpg.passes import eog_pass

    before = len(a.graph.edges)
    eog_pass(a.context)
    assert len(a.graph.edges) == before
