"""Builds the type sub-graph and annotates expressions with their types.

Every distinct type name (pointer depth included) gets one TypeNode.  Pointer
types record their pointee in the ``elementType`` property; record types get a
REFERS_TO edge to their RecordDeclaration, and a record's ``superTypes``
property (comma separated) becomes SUPERTYPE edges.
"""

from __future__ import annotations

from cpg.graph import EdgeLabel, Graph
from cpg.passes.base import UNKNOWN_TYPE, PassContext, refers_to

_COMPARISON = {"==", "!=", "<", ">", "<=", ">=", "&&", "||"}
_GENERIC_LITERAL_TYPES = {bool: "bool", int: "int", str: "string"}


class TypeRegistry:
    def __init__(self, graph: Graph) -> None:
        self.graph = graph
        self.types: dict[str, int] = {}
        for kind in ("ObjectType", "PointerType", "UnknownType"):
            for node in graph.nodes_by_kind(kind):
                name = graph.node(node).name
                if name is not None:
                    self.types[name] = node

    def get(self, name: str) -> int:
        if name in self.types:
            return self.types[name]
        if name == UNKNOWN_TYPE:
            node = self.graph.add_node("UnknownType", name)
        elif name.endswith("*"):
            element = name[:-1]
            node = self.graph.add_node("PointerType", name, properties={"elementType": element})
            self.types[name] = node
            self.get(element)
            return node
        else:
            node = self.graph.add_node("ObjectType", name)
        self.types[name] = node
        return node


def _declared_type(graph: Graph, node_id: int) -> str | None:
    props = graph.node(node_id).properties
    if graph.is_a(node_id, "FunctionDeclaration"):
        return props.get("returnType")  # type: ignore[return-value]
    return props.get("type")  # type: ignore[return-value]


def _known(t: object) -> str | None:
    return t if isinstance(t, str) and t and t != UNKNOWN_TYPE else None


def _function_return_type(graph: Graph, name: str | None) -> str | None:
    if not name:
        return None
    types = {
        graph.node(n).properties.get("returnType")
        for n in graph.nodes_by_name(name)
        if graph.is_a(n, "FunctionDeclaration")
    }
    if len(types) == 1:
        return _known(types.pop())
    return None


def _field_type(graph: Graph, member: int) -> str | None:
    target = refers_to(graph, member)
    return _known(_declared_type(graph, target)) if target is not None else None


def expression_type(graph: Graph, node_id: int) -> str | None:
    """Derive the type of an expression from its (already typed) children."""
    node = graph.node(node_id)
    kind = node.kind
    props = node.properties
    if kind == "Literal":
        if "type" in props:
            return _known(props["type"])
        value = props.get("value")
        return _GENERIC_LITERAL_TYPES.get(type(value))
    if graph.is_a(node_id, "DeclaredReferenceExpression"):
        target = refers_to(graph, node_id)
        return _known(_declared_type(graph, target)) if target is not None else None

    def child_type(role: str) -> str | None:
        child = graph.ast_child(node_id, role)
        return _known(graph.node(child).properties.get("type")) if child is not None else None

    if kind == "BinaryOperator":
        op = props.get("operator")
        lhs, rhs = child_type("LHS"), child_type("RHS")
        if op == "=":
            return lhs
        if op in _COMPARISON:
            return "int"
        if lhs is not None and lhs == rhs:
            return lhs
        if op in ("+", "-") and lhs is not None and lhs.endswith("*") and rhs == "int":
            return lhs
        return None
    if kind == "UnaryOperator":
        op = props.get("operator")
        operand = child_type("INPUT")
        if op == "!":
            return "int"
        if operand is None:
            return None
        if op == "*":
            return operand[:-1] if operand.endswith("*") else None
        if op == "&":
            return operand + "*"
        return operand
    if kind == "ConditionalExpression":
        then, other = child_type("THEN"), child_type("ELSE")
        return then if then is not None and then == other else None
    if graph.is_a(node_id, "CallExpression"):
        return _function_return_type(graph, node.name)
    if kind == "MemberExpression":
        return _field_type(graph, node_id)
    return None


def type_pass(ctx: PassContext) -> None:
    graph = ctx.graph
    registry = TypeRegistry(graph)

    for decl in graph.nodes_by_kind("ValueDeclaration", include_subkinds=True):
        declared = _declared_type(graph, decl)
        if isinstance(declared, str) and declared:
            registry.get(declared)

    for record in graph.nodes_by_kind("RecordDeclaration"):
        node = graph.node(record)
        kind = node.properties.get("recordKind")
        type_name = f"{kind} {node.name}" if kind == "struct" else node.name
        if not type_name:
            continue
        type_node = registry.get(type_name)
        if not graph.has_edge(type_node, record, EdgeLabel.REFERS_TO):
            graph.add_edge(type_node, record, EdgeLabel.REFERS_TO)
        supers = node.properties.get("superTypes")
        if isinstance(supers, str):
            for name in filter(None, (s.strip() for s in supers.split(","))):
                super_node = registry.get(name)
                if not graph.has_edge(type_node, super_node, EdgeLabel.SUPERTYPE):
                    graph.add_edge(type_node, super_node, EdgeLabel.SUPERTYPE)

    for root in graph.nodes_by_kind("TranslationUnitDeclaration"):
        # reverse pre-order visits children before parents
        for node_id in reversed(graph.ast_descendants(root)):
            if not graph.is_a(node_id, "Expression"):
                continue
            derived = expression_type(graph, node_id)
            if derived is not None:
                graph.set_property(node_id, "type", derived)
                registry.get(derived)
