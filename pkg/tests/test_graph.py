from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpg.errors import EdgeAttributeError, IntegrityError, TaxonomyError
from cpg.graph import BranchValue, EdgeLabel, Flag, Graph, SourceLocation
from cpg.taxonomy import MANDATORY_KINDS, TAXONOMY, Taxonomy

import programs


def test_first_node_gets_id_one():
    g = Graph()
    assert g.add_node("TranslationUnitDeclaration", name="main.c") == 1
    assert len(g) == 1


def test_ids_are_distinct_and_dense():
    g = Graph()
    ids = [g.add_node("Literal") for _ in range(5)]
    assert ids == [1, 2, 3, 4, 5]


def test_unknown_kind_is_rejected():
    with pytest.raises(TaxonomyError, match="Bogus"):
        Graph().add_node("Bogus")


def test_ast_edge_keeps_role_and_index():
    g = Graph()
    p, c = g.add_node("BinaryOperator"), g.add_node("DeclaredReferenceExpression", "a")
    edge = g.add_edge(p, c, EdgeLabel.AST, role="LHS", index=0)
    assert (edge.role, edge.index) == ("LHS", 0)
    assert g.ast_role(c) == "LHS"


def test_role_on_eog_edge_is_an_attribute_error():
    g = Graph()
    a, b = g.add_node("Literal"), g.add_node("Literal")
    with pytest.raises(EdgeAttributeError):
        g.add_edge(a, b, EdgeLabel.EOG, role="LHS")


def test_branch_only_on_eog():
    g = Graph()
    a, b = g.add_node("Literal"), g.add_node("Literal")
    with pytest.raises(EdgeAttributeError):
        g.add_edge(a, b, EdgeLabel.DFG, branch=BranchValue.TRUE)
    g.add_edge(a, b, EdgeLabel.EOG, branch=BranchValue.TRUE)


def test_dangling_endpoint():
    g = Graph()
    a = g.add_node("Literal")
    with pytest.raises(IntegrityError):
        g.add_edge(a, 999, EdgeLabel.DFG)


def test_duplicate_ast_slot_rejected():
    g = Graph()
    p, a, b = g.add_node("CompoundStatement"), g.add_node("Literal"), g.add_node("Literal")
    g.add_edge(p, a, "AST", role="STATEMENT", index=0)
    with pytest.raises(EdgeAttributeError):
        g.add_edge(p, b, "AST", role="STATEMENT", index=0)


def test_parallel_edges_allowed():
    g = Graph()
    a, b = g.add_node("Literal"), g.add_node("Literal")
    g.add_edge(a, b, "DFG")
    g.add_edge(a, b, "DFG")
    assert g.neighbors(a, "DFG") == [b, b]


def test_property_values_must_be_scalar():
    g = Graph()
    with pytest.raises(TypeError):
        g.add_node("Literal", properties={"value": [1, 2]})


def test_inferred_nodes_have_no_location():
    g = Graph()
    with pytest.raises(ValueError):
        g.add_node("FunctionDeclaration", "f", SourceLocation("a.c", 1, 1, 1, 2), [Flag.INFERRED])


def test_location_must_be_ordered():
    with pytest.raises(ValueError):
        SourceLocation("a.c", 3, 1, 2, 1)


@pytest.mark.parametrize("text", ["true", "false", "default", "case:3", "case:red"])
def test_branch_value_text_round_trip(text):
    assert str(BranchValue.parse(text)) == text


def test_subkind_examples():
    assert TAXONOMY.is_subkind("MemberCallExpression", "CallExpression")
    assert TAXONOMY.is_subkind("CallExpression", "CallExpression")
    assert not TAXONOMY.is_subkind("CallExpression", "MemberCallExpression")


def test_mandatory_kinds_registered():
    for kind in MANDATORY_KINDS:
        assert kind in TAXONOMY


def test_registering_custom_kind_in_copy():
    tax = TAXONOMY.copy()
    tax.register("LambdaExpression", "Expression")
    assert tax.is_subkind("LambdaExpression", "Expression")
    assert "LambdaExpression" not in TAXONOMY
    with pytest.raises(TaxonomyError):
        tax.register("LambdaExpression", "Statement")
    with pytest.raises(TaxonomyError):
        Taxonomy().register("Orphan", "Missing")


def test_neighbors_of_isolated_node():
    g = Graph()
    n = g.add_node("Literal")
    assert g.neighbors(n, "AST") == []
    assert g.neighbors(n, "DFG", direction="in") == []


def test_neighbors_unknown_node():
    with pytest.raises(IntegrityError):
        Graph().neighbors(3, "AST")


def test_ast_neighbors_in_index_order():
    g = Graph()
    p = g.add_node("CallExpression", "f")
    second = g.add_node("Literal")
    first = g.add_node("Literal")
    g.add_edge(p, second, "AST", role="ARGUMENT", index=1)
    g.add_edge(p, first, "AST", role="ARGUMENT", index=0)
    assert g.neighbors(p, "AST") == [first, second]
    assert g.ast_children(p) == g.ast_children(p) == [first, second]


def test_refers_to_neighbor_after_symbols(run):
    g = run("int f(void) {\n  int x;\n  x = 1;\n  return x;\n}\n").graph
    from conftest import one

    decl = one(g, "VariableDeclaration", "x")
    for ref in g.nodes_by_name("x"):
        if g.kind_of(ref) == "DeclaredReferenceExpression":
            assert g.neighbors(ref, "REFERS_TO") == [decl]


def test_nodes_by_kind_with_and_without_subkinds(run):
    g = run(programs.MEMBER_CALL, dfg_mode="decl").graph
    member_calls = g.nodes_by_kind("MemberCallExpression")
    assert len(member_calls) == 1
    assert member_calls[0] in g.nodes_by_kind("CallExpression", include_subkinds=True)
    assert member_calls[0] not in g.nodes_by_kind("CallExpression")
    assert Graph().nodes_by_kind("CallExpression", include_subkinds=True) == []


KINDS = sorted(TAXONOMY)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(KINDS), st.sampled_from(KINDS), st.sampled_from(KINDS))
def test_subkind_is_a_partial_order(a, b, c):
    assert TAXONOMY.is_subkind(a, a)
    if TAXONOMY.is_subkind(a, b) and TAXONOMY.is_subkind(b, a):
        assert a == b
    if TAXONOMY.is_subkind(a, b) and TAXONOMY.is_subkind(b, c):
        assert TAXONOMY.is_subkind(a, c)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(KINDS))
def test_ancestor_chain_matches_subkind(kind):
    chain = TAXONOMY.ancestors(kind)
    assert chain[-1] == kind
    for other in KINDS:
        assert TAXONOMY.is_subkind(kind, other) == (other in chain)


@pytest.mark.parametrize("name", [
    "BINARY_EXAMPLE", "NESTED_LOOPS", "NULL_MIXED", "UNDECLARED_CALLS", "MEMBER_CALL", "ONE_UNHANDLED",
])
def test_ast_forest(run, name):
    g = run(getattr(programs, name)).graph
    for node in g:
        assert node.kind in g.taxonomy
        assert len(g.in_edges(node.id, "AST")) <= 1
    roots = set(g.ast_roots())
    assert roots == set(g.nodes_by_kind("TranslationUnitDeclaration"))
