from __future__ import annotations

import time

import pytest

from cpg.analysis import analyze, analyze_text
from cpg.errors import ConfigurationError
from cpg.passes import DEFAULT_PASSES, DfgMode, Pass, dfg_pass
from cpg.passes.base import is_write
from cpg.query import exists_path
from conftest import find, graph_def_use, one
from dfg_oracle import def_use_pairs, generate

import programs


def flow(source: str):
    return analyze_text(source, dfg_mode="flow").graph


def decl(source: str):
    return analyze_text(source, dfg_mode="decl").graph


def dfg(graph, src, dst) -> bool:
    return graph.has_edge(src, dst, "DFG")


def refs(graph, name):
    found = find(graph, "DeclaredReferenceExpression", name)
    writes = [r for r in found if is_write(graph, r)]
    reads = [r for r in found if not is_write(graph, r)]
    return writes, reads


CHAIN = "int f(void) {\n  int x;\n  int y;\n  x = 1;\n  y = x;\n  return y;\n}\n"


def test_assignment_chain():
    g = flow(CHAIN)
    lit = one(g, "Literal")
    [write_x], [read_x] = refs(g, "x")
    assert dfg(g, lit, write_x)
    assert dfg(g, write_x, read_x)
    assert exists_path(g, lit, read_x, "DFG") == [lit, write_x, read_x]


def test_both_branch_writes_reach_use():
    g = flow("int use(int v);\nvoid f(int c) {\n  int x;\n  if (c) x = 1; else x = 2;\n  use(x);\n}\n")
    writes, [read] = refs(g, "x")
    assert len(writes) == 2
    assert sorted(e.src for e in g.in_edges(read, "DFG")) == sorted(writes)


def test_argument_flows_to_parameter():
    g = flow("int f(int p) { return p; }\nint g(int a) { return f(a); }\n")
    [arg] = find(g, "DeclaredReferenceExpression", "a")
    assert dfg(g, arg, one(g, "ParameterDeclaration", "p"))


def test_return_and_call_values():
    g = flow("int f(int p) { return p; }\nint g(int a) { return f(a); }\n")
    f = one(g, "FunctionDeclaration", "f")
    call = one(g, "CallExpression", "f")
    ret = g.ast_children(g.ast_child(f, "BODY"))[0]
    assert dfg(g, ret, f)
    assert dfg(g, f, call)


def test_operator_value_edges():
    g = flow("int f(int a) { return -a + (a ? 1 : 2); }")
    neg = one(g, "UnaryOperator", operator="-")
    plus = one(g, "BinaryOperator", operator="+")
    cond = one(g, "ConditionalExpression")
    assert dfg(g, g.ast_child(neg, "INPUT"), neg)
    assert dfg(g, neg, plus) and dfg(g, cond, plus)
    assert dfg(g, g.ast_child(cond, "THEN"), cond) and dfg(g, g.ast_child(cond, "ELSE"), cond)


def test_initializer_to_declaration():
    g = flow("int f(void) { int x = 3; return x; }")
    x = one(g, "VariableDeclaration", "x")
    assert dfg(g, one(g, "Literal"), x)
    [], [read] = refs(g, "x")
    assert dfg(g, x, read)


def test_overwritten_definition_is_killed():
    g = flow("int f(void) { int x = 3; x = 4; return x; }")
    x = one(g, "VariableDeclaration", "x")
    [write], [read] = refs(g, "x")
    assert dfg(g, write, read)
    assert not dfg(g, x, read)


def test_uninitialized_declaration_kills():
    # without the kill, the write from the previous iteration would reach the read
    g = flow("int f(int c) { while (c) { int y; c = y; y = 1; } return c; }")
    [y_write], [y_read] = refs(g, "y")
    assert not dfg(g, y_write, y_read)


def test_loop_carried_definition():
    g = flow("int f(int n) { int s = 0; while (n) { s = s + n; n = n - 1; } return s; }")
    s = one(g, "VariableDeclaration", "s")
    [write], reads = refs(g, "s")
    body_read, final_read = sorted(reads)
    assert {e.src for e in g.in_edges(body_read, "DFG")} == {s, write}
    assert {e.src for e in g.in_edges(final_read, "DFG")} == {s, write}


def test_globals_keep_declaration_links():
    g = flow("int counter = 0;\nvoid bump(void) { counter = counter + 1; }\n")
    decl_node = one(g, "VariableDeclaration", "counter")
    [write], [read] = refs(g, "counter")
    assert dfg(g, write, decl_node)
    assert dfg(g, decl_node, read)


def test_declaration_link_mode():
    g = decl(CHAIN)
    x = one(g, "VariableDeclaration", "x")
    [write_x], [read_x] = refs(g, "x")
    assert dfg(g, write_x, x)
    assert dfg(g, x, read_x)
    assert not dfg(g, write_x, read_x)
    assert g.meta["dfg_mode"] is DfgMode.DECLARATION_LINK


def test_problem_nodes_have_no_flow():
    g = flow("int f(int x) {\n  switch (x) { }\n  return x;\n}\n")
    problem = one(g, "ProblemNode")
    assert g.in_edges(problem, "DFG") == [] and g.out_edges(problem, "DFG") == []


def test_no_duplicate_edges():
    g = flow(programs.NESTED_LOOPS)
    edges = [(e.src, e.dst) for e in g.edges_with_label("DFG")]
    assert len(edges) == len(set(edges))


def test_flow_mode_requires_eog():
    a = analyze_text("int f() { return 1; }", passes=[p for p in DEFAULT_PASSES if p.name == "symbols"])
    with pytest.raises(ConfigurationError):
        dfg_pass(a.context)


def _checked_pipeline():
    return [p if p.name != "dfg" else Pass("dfg", lambda ctx: dfg_pass(ctx, check_monotone=True), p.depends_on)
            for p in DEFAULT_PASSES]


@pytest.mark.parametrize("source", [
    programs.NESTED_LOOPS, *programs.FOR_LOOPS.values(), programs.NULL_MIXED, CHAIN,
])
def test_fixpoint_bounded_and_monotone(source):
    a = analyze_text(source, passes=_checked_pipeline())
    stats = a.context.stats
    assert stats["dfg_monotone"] is True
    for region in stats["dfg_regions"]:
        assert 1 <= region["rounds"] <= region["nodes"]
    assert stats["dfg_max_rounds"] <= len(a.graph)


def test_nested_loops_need_several_rounds():
    a = analyze_text(programs.NESTED_LOOPS)
    assert a.context.stats["dfg_max_rounds"] >= 2


def test_corpus_fixpoints(corpus_dir):
    from cpg.analysis import run_pipeline

    a = analyze([corpus_dir], passes=None)
    run_pipeline(a, "flow", _checked_pipeline())
    stats = a.context.stats
    assert stats["dfg_monotone"] is True
    assert all(r["rounds"] <= r["nodes"] for r in stats["dfg_regions"])


def test_oracle_sees_straight_line_chain():
    program = generate(3)
    assert def_use_pairs(program)


@pytest.mark.parametrize("seed", range(60))
def test_matches_oracle(seed):
    program = generate(seed)
    analysis = analyze_text(program.source, dfg_mode="flow")
    assert not analysis.diagnostics, program.source
    assert graph_def_use(analysis.graph) == def_use_pairs(program), program.source


def test_declaration_mode_differs_from_oracle():
    # guards against a comparison that cannot fail
    differs = 0
    for seed in range(10):
        program = generate(seed)
        graph = analyze_text(program.source, dfg_mode="decl").graph
        differs += graph_def_use(graph) != def_use_pairs(program)
    assert differs > 0


def test_oracle_runtime_budget():
    started = time.perf_counter()
    for seed in range(100, 150):
        program = generate(seed)
        analyze_text(program.source)
        def_use_pairs(program)
    assert time.perf_counter() - started < 30
