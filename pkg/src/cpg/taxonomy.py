"""Node-kind registry.

Kinds form a forest under single inheritance.  The registry is plain data so
that callers (frontends, passes, tests) can register additional kinds without
touching dispatch code elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from cpg.errors import TaxonomyError


@dataclass(frozen=True)
class NodeKind:
    name: str
    parent: str | None = None


# (kind, parent) in registration order; parents always precede children.
_BUILTIN_KINDS: tuple[tuple[str, str | None], ...] = (
    ("Declaration", None),
    ("Statement", None),
    ("Expression", None),
    ("TypeNode", None),
    ("ProblemNode", None),
    # structural entities
    ("TranslationUnitDeclaration", "Declaration"),
    ("NamespaceDeclaration", "Declaration"),
    ("RecordDeclaration", "Declaration"),
    # value declarations
    ("ValueDeclaration", "Declaration"),
    ("VariableDeclaration", "ValueDeclaration"),
    ("ParameterDeclaration", "ValueDeclaration"),
    ("FieldDeclaration", "ValueDeclaration"),
    ("FunctionDeclaration", "ValueDeclaration"),
    ("MethodDeclaration", "FunctionDeclaration"),
    ("ConstructorDeclaration", "MethodDeclaration"),
    # statements
    ("CompoundStatement", "Statement"),
    ("DeclarationStatement", "Statement"),
    ("IfStatement", "Statement"),
    ("WhileStatement", "Statement"),
    ("DoStatement", "Statement"),
    ("ForStatement", "Statement"),
    ("ReturnStatement", "Statement"),
    ("BreakStatement", "Statement"),
    ("ContinueStatement", "Statement"),
    ("TryStatement", "Statement"),
    # expressions
    ("Literal", "Expression"),
    ("DeclaredReferenceExpression", "Expression"),
    ("BinaryOperator", "Expression"),
    ("UnaryOperator", "Expression"),
    ("CallExpression", "Expression"),
    ("MemberCallExpression", "CallExpression"),
    ("MemberExpression", "Expression"),
    ("ConditionalExpression", "Expression"),
    # types
    ("ObjectType", "TypeNode"),
    ("PointerType", "TypeNode"),
    ("UnknownType", "TypeNode"),
)


class Taxonomy:
    """Registry of node kinds with single inheritance."""

    def __init__(self, kinds: Iterable[tuple[str, str | None]] = ()) -> None:
        self._kinds: dict[str, NodeKind] = {}
        for name, parent in kinds:
            self.register(name, parent)

    def register(self, name: str, parent: str | None = None) -> NodeKind:
        if not name or not isinstance(name, str):
            raise TaxonomyError(f"invalid kind name {name!r}")
        if parent is not None and parent not in self._kinds:
            raise TaxonomyError(f"parent kind {parent!r} of {name!r} is not registered")
        existing = self._kinds.get(name)
        if existing is not None:
            if existing.parent != parent:
                raise TaxonomyError(
                    f"kind {name!r} already registered with parent {existing.parent!r}"
                )
            return existing
        kind = NodeKind(name, parent)
        self._kinds[name] = kind
        return kind

    def get(self, name: str) -> NodeKind:
        try:
            return self._kinds[name]
        except KeyError:
            raise TaxonomyError(f"unknown node kind {name!r}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._kinds

    def __iter__(self) -> Iterator[str]:
        return iter(self._kinds)

    def __len__(self) -> int:
        return len(self._kinds)

    def ancestors(self, name: str) -> list[str]:
        """Return the parent chain of ``name``, root first, ``name`` last."""
        chain = []
        kind: NodeKind | None = self.get(name)
        while kind is not None:
            chain.append(kind.name)
            kind = self._kinds[kind.parent] if kind.parent else None
        chain.reverse()
        return chain

    def is_subkind(self, kind: str, ancestor: str) -> bool:
        """True iff ``ancestor`` lies on the parent chain of ``kind`` (inclusive)."""
        self.get(ancestor)
        current: NodeKind | None = self.get(kind)
        while current is not None:
            if current.name == ancestor:
                return True
            current = self._kinds[current.parent] if current.parent else None
        return False

    def subkinds(self, name: str) -> list[str]:
        """All registered kinds that are subkinds of ``name`` (inclusive)."""
        self.get(name)
        return [k for k in self._kinds if self.is_subkind(k, name)]

    def copy(self) -> Taxonomy:
        clone = Taxonomy()
        clone._kinds = dict(self._kinds)
        return clone


TAXONOMY = Taxonomy(_BUILTIN_KINDS)

MANDATORY_KINDS = (
    "TranslationUnitDeclaration", "NamespaceDeclaration", "RecordDeclaration",
    "FieldDeclaration", "FunctionDeclaration", "MethodDeclaration",
    "ConstructorDeclaration", "ParameterDeclaration", "VariableDeclaration",
    "CompoundStatement", "IfStatement", "WhileStatement", "ForStatement",
    "ReturnStatement", "BreakStatement", "ContinueStatement", "DeclarationStatement",
    "Literal", "DeclaredReferenceExpression", "BinaryOperator", "UnaryOperator",
    "CallExpression", "MemberCallExpression", "MemberExpression",
    "ConditionalExpression",
)


def is_subkind(kind: str, ancestor: str) -> bool:
    return TAXONOMY.is_subkind(kind, ancestor)


def register_kind(name: str, parent: str | None = None) -> NodeKind:
    """Register a new kind in the process-wide taxonomy."""
    return TAXONOMY.register(name, parent)
