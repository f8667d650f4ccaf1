"""Scope stack used by frontends, and the scope trees kept for later passes."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from cpg.errors import ScopeError

logger = logging.getLogger(__name__)


class ScopeKind(str, Enum):
    GLOBAL = "GLOBAL"
    RECORD = "RECORD"
    FUNCTION = "FUNCTION"
    BLOCK = "BLOCK"
    LOOP = "LOOP"
    TRY = "TRY"


@dataclass
class Scope:
    id: int
    kind: ScopeKind
    ast_node: int | None
    parent: int | None = None
    declarations: dict[str, int] = field(default_factory=dict)
    children: list[int] = field(default_factory=list)
    break_target: int | None = None
    continue_target: int | None = None


@dataclass
class Diagnostic:
    message: str
    node: int | None = None

    def __str__(self) -> str:
        return self.message if self.node is None else f"node {self.node}: {self.message}"


class ScopeTree:
    """Completed scopes of one translation unit, navigable by id."""

    def __init__(self) -> None:
        self.scopes: dict[int, Scope] = {}
        self.root: int = 0
        # node id -> id of the scope that was active when the node was created
        self.node_scopes: dict[int, int] = {}
        self.diagnostics: list[Diagnostic] = []

    def scope(self, scope_id: int) -> Scope:
        try:
            return self.scopes[scope_id]
        except KeyError:
            raise ScopeError(f"unknown scope id {scope_id}") from None

    @property
    def global_scope(self) -> Scope:
        return self.scopes[self.root]

    def scope_of(self, node_id: int) -> int | None:
        return self.node_scopes.get(node_id)

    def chain(self, scope_id: int) -> list[Scope]:
        """Scopes from ``scope_id`` outwards to the global scope."""
        result = []
        current: int | None = scope_id
        while current is not None:
            scope = self.scope(current)
            result.append(scope)
            current = scope.parent
        return result

    def scope_for_node(self, ast_node: int, kind: ScopeKind | None = None) -> Scope | None:
        for scope in self.scopes.values():
            if scope.ast_node == ast_node and (kind is None or scope.kind is kind):
                return scope
        return None

    def resolve(self, name: str, from_scope: int | None = None) -> int | None:
        """Innermost-first lookup of ``name``; qualified names use ``.``."""
        start = self.root if from_scope is None else from_scope
        if "." in name:
            head, _, rest = name.partition(".")
            container = self.resolve(head, start)
            if container is None:
                return None
            return self._resolve_member(container, rest)
        for scope in self.chain(start):
            if name in scope.declarations:
                return scope.declarations[name]
        return None

    def _resolve_member(self, container_decl: int, path: str) -> int | None:
        scope = self.scope_for_node(container_decl, ScopeKind.RECORD)
        if scope is None:
            return None
        head, _, rest = path.partition(".")
        decl = scope.declarations.get(head)
        if decl is None or not rest:
            return decl
        return self._resolve_member(decl, rest)

    def jump_target(self, kind: str, from_scope: int) -> int | None:
        """Anchor node of the nearest enclosing loop for ``break``/``continue``."""
        if kind not in ("break", "continue"):
            raise ValueError(f"jump kind must be 'break' or 'continue', not {kind!r}")
        for scope in self.chain(from_scope):
            if scope.kind is ScopeKind.LOOP:
                return scope.break_target if kind == "break" else scope.continue_target
            if scope.kind is ScopeKind.FUNCTION:
                break
        return None


class ScopeManager:
    """Tracks the active scope stack while a frontend walks one file."""

    def __init__(self, root_node: int | None = None) -> None:
        self.tree = ScopeTree()
        self._next_id = 0
        root = self._new_scope(ScopeKind.GLOBAL, root_node, None)
        self.tree.root = root.id
        self._stack: list[int] = [root.id]

    def _new_scope(self, kind: ScopeKind, ast_node: int | None, parent: int | None) -> Scope:
        scope = Scope(self._next_id, kind, ast_node, parent)
        self._next_id += 1
        self.tree.scopes[scope.id] = scope
        if parent is not None:
            self.tree.scopes[parent].children.append(scope.id)
        return scope

    @property
    def current(self) -> Scope:
        return self.tree.scopes[self._stack[-1]]

    @property
    def depth(self) -> int:
        return len(self._stack)

    @property
    def stack(self) -> list[int]:
        return list(self._stack)

    def enter_scope(self, kind: ScopeKind | str, ast_node: int | None) -> int:
        kind = ScopeKind(kind)
        if kind is ScopeKind.GLOBAL:
            raise ScopeError("the global scope cannot be entered twice")
        scope = self._new_scope(kind, ast_node, self._stack[-1])
        self._stack.append(scope.id)
        return scope.id

    def leave_scope(self) -> int:
        if len(self._stack) <= 1:
            raise ScopeError("scope stack underflow: cannot leave the global scope")
        return self._stack.pop()

    def declare(self, name: str, decl: int) -> None:
        scope = self.current
        if name in scope.declarations and scope.declarations[name] != decl:
            message = f"redeclaration of {name!r} in {scope.kind.value} scope {scope.id}"
            logger.debug(message)
            self.tree.diagnostics.append(Diagnostic(message, decl))
        scope.declarations[name] = decl

    def record(self, node_id: int) -> None:
        """Remember the active scope of ``node_id`` for later resolution."""
        self.tree.node_scopes[node_id] = self._stack[-1]

    def resolve(self, name: str, from_scope: int | None = None) -> int | None:
        return self.tree.resolve(name, self._stack[-1] if from_scope is None else from_scope)

    def jump_target(self, kind: str, from_scope: int | None = None) -> int | None:
        return self.tree.jump_target(kind, self._stack[-1] if from_scope is None else from_scope)

    def set_jump_targets(self, break_target: int | None, continue_target: int | None) -> None:
        scope = self.current
        if scope.kind is not ScopeKind.LOOP:
            raise ScopeError("jump targets can only be set on LOOP scopes")
        scope.break_target = break_target
        scope.continue_target = continue_target


def resolve_across(trees: list[ScopeTree], tree: ScopeTree | None, name: str,
                   from_scope: int | None) -> int | None:
    """Resolve in ``tree`` first, then in the global scopes of the other trees.

    Global scopes of all translation units are merged this way; nothing else
    crosses file boundaries.
    """
    if tree is not None:
        found = tree.resolve(name, from_scope)
        if found is not None:
            return found
    for other in trees:
        if other is tree:
            continue
        found = other.resolve(name, other.root)
        if found is not None:
            return found
    return None
