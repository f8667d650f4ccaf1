"""Labeled directed property multi-graph used as the code property graph."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Union

from cpg.errors import EdgeAttributeError, IntegrityError, TaxonomyError
from cpg.taxonomy import TAXONOMY, Taxonomy

Scalar = Union[str, int, bool, None]


class EdgeLabel(str, Enum):
    AST = "AST"
    EOG = "EOG"
    DFG = "DFG"
    REFERS_TO = "REFERS_TO"
    INVOKES = "INVOKES"
    SUPERTYPE = "SUPERTYPE"

    def __str__(self) -> str:
        return self.value


class Flag(str, Enum):
    IMPLICIT = "IMPLICIT"
    INFERRED = "INFERRED"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class SourceLocation:
    """1-based source span; ``end_col`` points one past the last character."""

    file: str
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def __post_init__(self) -> None:
        if min(self.start_line, self.start_col, self.end_line, self.end_col) < 1:
            raise ValueError(f"location components must be >= 1: {self}")
        if self.start_line > self.end_line or (
            self.start_line == self.end_line and self.start_col > self.end_col
        ):
            raise ValueError(f"location end precedes start: {self}")

    @property
    def lines(self) -> range:
        return range(self.start_line, self.end_line + 1)

    def __str__(self) -> str:
        return f"{self.file}:{self.start_line}:{self.start_col}"


@dataclass(frozen=True)
class BranchValue:
    """Outcome of a branching expression that selects an EOG edge."""

    kind: str  # "true" | "false" | "case" | "default"
    value: Scalar = None

    def __post_init__(self) -> None:
        if self.kind not in ("true", "false", "case", "default"):
            raise ValueError(f"unknown branch kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "case":
            return f"case:{self.value}"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> BranchValue:
        if text.startswith("case:"):
            raw = text[len("case:"):]
            value: Scalar = int(raw) if raw.lstrip("-").isdigit() else raw
            return cls("case", value)
        return cls(text)


BranchValue.TRUE = BranchValue("true")  # type: ignore[attr-defined]
BranchValue.FALSE = BranchValue("false")  # type: ignore[attr-defined]
BranchValue.DEFAULT = BranchValue("default")  # type: ignore[attr-defined]

TRUE: BranchValue = BranchValue.TRUE  # type: ignore[attr-defined]
FALSE: BranchValue = BranchValue.FALSE  # type: ignore[attr-defined]


@dataclass
class Node:
    id: int
    kind: str
    name: str | None = None
    code: str | None = None
    location: SourceLocation | None = None
    flags: frozenset[Flag] = frozenset()
    properties: dict[str, Scalar] = field(default_factory=dict)

    @property
    def implicit(self) -> bool:
        return Flag.IMPLICIT in self.flags

    @property
    def inferred(self) -> bool:
        return Flag.INFERRED in self.flags

    def __str__(self) -> str:
        label = f"{self.kind}#{self.id}"
        return f"{label}({self.name})" if self.name is not None else label


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    label: EdgeLabel
    role: str | None = None
    index: int | None = None
    branch: BranchValue | None = None


def _check_scalar(key: str, value: object) -> None:
    if value is not None and not isinstance(value, (str, int, bool)):
        raise TypeError(f"property {key!r} must be str, int, bool or None, got {type(value).__name__}")


class Graph:
    """Multi-graph of :class:`Node` objects joined by labeled :class:`Edge` objects.

    Node ids are dense integers starting at 1 and assigned in creation order.
    Parallel edges are allowed.
    """

    def __init__(self, taxonomy: Taxonomy | None = None) -> None:
        self.taxonomy = taxonomy if taxonomy is not None else TAXONOMY
        self.nodes: dict[int, Node] = {}
        self.edges: list[Edge] = []
        self._out: dict[int, list[Edge]] = defaultdict(list)
        self._in: dict[int, list[Edge]] = defaultdict(list)
        self._by_kind: dict[str, list[int]] = defaultdict(list)
        self._by_name: dict[str, list[int]] = defaultdict(list)
        self._ast_slots: set[tuple[int, str | None, int]] = set()
        self._next_id = 1
        # Non-serialized analysis settings (e.g. the DFG mode used by passes).
        self.meta: dict[str, object] = {}

    # -- construction -------------------------------------------------------

    def add_node(
        self,
        kind: str,
        name: str | None = None,
        location: SourceLocation | None = None,
        flags: Iterable[Flag] = (),
        *,
        code: str | None = None,
        properties: dict[str, Scalar] | None = None,
        node_id: int | None = None,
    ) -> int:
        if kind not in self.taxonomy:
            raise TaxonomyError(f"unknown node kind {kind!r}")
        flags = frozenset(Flag(f) for f in flags)
        if Flag.INFERRED in flags and location is not None:
            raise ValueError("INFERRED nodes stand for missing code and carry no location")
        props = dict(properties or {})
        for key, value in props.items():
            _check_scalar(key, value)
        if node_id is None:
            node_id = self._next_id
        elif node_id in self.nodes:
            raise IntegrityError(f"node id {node_id} already exists")
        self._next_id = max(self._next_id, node_id + 1)
        node = Node(node_id, kind, name, code, location, flags, props)
        self.nodes[node_id] = node
        self._by_kind[kind].append(node_id)
        if name is not None:
            self._by_name[name].append(node_id)
        return node_id

    def add_edge(
        self,
        src: int,
        dst: int,
        label: EdgeLabel | str,
        role: str | None = None,
        index: int | None = None,
        branch: BranchValue | None = None,
    ) -> Edge:
        label = EdgeLabel(label)
        for endpoint in (src, dst):
            if endpoint not in self.nodes:
                raise IntegrityError(f"edge endpoint {endpoint} does not exist")
        if label is not EdgeLabel.AST and (role is not None or index is not None):
            raise EdgeAttributeError(f"role/index are only legal on AST edges, not {label}")
        if label is not EdgeLabel.EOG and branch is not None:
            raise EdgeAttributeError(f"branch values are only legal on EOG edges, not {label}")
        if index is not None:
            if not isinstance(index, int) or isinstance(index, bool) or index < 0:
                raise EdgeAttributeError(f"AST index must be a non-negative integer, got {index!r}")
            slot = (src, role, index)
            if slot in self._ast_slots:
                raise EdgeAttributeError(
                    f"node {src} already has an AST child with role {role!r} at index {index}"
                )
            self._ast_slots.add(slot)
        edge = Edge(src, dst, label, role, index, branch)
        self.edges.append(edge)
        self._out[src].append(edge)
        self._in[dst].append(edge)
        return edge

    def set_property(self, node_id: int, key: str, value: Scalar) -> None:
        _check_scalar(key, value)
        self.node(node_id).properties[key] = value

    # -- lookup -------------------------------------------------------------

    def node(self, node_id: int) -> Node:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise IntegrityError(f"unknown node id {node_id}") from None

    def __contains__(self, node_id: object) -> bool:
        return node_id in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[Node]:
        return iter(self.nodes.values())

    def kind_of(self, node_id: int) -> str:
        return self.node(node_id).kind

    def is_a(self, node_id: int, kind: str) -> bool:
        return self.taxonomy.is_subkind(self.node(node_id).kind, kind)

    def out_edges(self, node_id: int, label: EdgeLabel | str | None = None) -> list[Edge]:
        self.node(node_id)
        edges = self._out.get(node_id, [])
        if label is None:
            return list(edges)
        label = EdgeLabel(label)
        return [e for e in edges if e.label is label]

    def in_edges(self, node_id: int, label: EdgeLabel | str | None = None) -> list[Edge]:
        self.node(node_id)
        edges = self._in.get(node_id, [])
        if label is None:
            return list(edges)
        label = EdgeLabel(label)
        return [e for e in edges if e.label is label]

    def has_edge(self, src: int, dst: int, label: EdgeLabel | str) -> bool:
        label = EdgeLabel(label)
        return any(e.dst == dst and e.label is label for e in self._out.get(src, ()))

    def neighbors(
        self, node_id: int, label: EdgeLabel | str, direction: str = "out"
    ) -> list[int]:
        """Targets (``out``) or sources (``in``) of edges with ``label``.

        AST results are ordered by ``(role, index)``.
        """
        if direction not in ("out", "in"):
            raise ValueError(f"direction must be 'out' or 'in', not {direction!r}")
        label = EdgeLabel(label)
        edges = self.out_edges(node_id, label) if direction == "out" else self.in_edges(node_id, label)
        if label is EdgeLabel.AST:
            edges = sorted(edges, key=lambda e: (e.role or "", -1 if e.index is None else e.index))
        return [e.dst if direction == "out" else e.src for e in edges]

    def ast_child_edges(self, node_id: int, role: str | None = None) -> list[Edge]:
        """AST edges out of ``node_id`` in syntactic order (by index, then insertion)."""
        edges = [e for e in self.out_edges(node_id, EdgeLabel.AST) if role is None or e.role == role]
        order = {id(e): i for i, e in enumerate(edges)}
        return sorted(
            edges,
            key=lambda e: (float("inf") if e.index is None else e.index, order[id(e)]),
        )

    def ast_children(self, node_id: int, role: str | None = None) -> list[int]:
        return [e.dst for e in self.ast_child_edges(node_id, role)]

    def ast_child(self, node_id: int, role: str) -> int | None:
        children = self.ast_children(node_id, role)
        return children[0] if children else None

    def ast_parent(self, node_id: int) -> int | None:
        parents = self.in_edges(node_id, EdgeLabel.AST)
        return parents[0].src if parents else None

    def ast_role(self, node_id: int) -> str | None:
        parents = self.in_edges(node_id, EdgeLabel.AST)
        return parents[0].role if parents else None

    def ast_descendants(self, node_id: int, include_self: bool = True) -> list[int]:
        """Pre-order walk of the AST subtree rooted at ``node_id``."""
        result = []
        stack = [node_id]
        while stack:
            current = stack.pop()
            result.append(current)
            stack.extend(reversed(self.ast_children(current)))
        return result if include_self else result[1:]

    def ast_roots(self) -> list[int]:
        """Nodes that take part in the AST but have no AST parent."""
        roots = []
        for n, node in self.nodes.items():
            if any(e.label is EdgeLabel.AST for e in self._in.get(n, ())):
                continue
            has_children = any(e.label is EdgeLabel.AST for e in self._out.get(n, ()))
            if has_children or node.kind == "TranslationUnitDeclaration":
                roots.append(n)
        return roots

    def nodes_by_kind(self, kind: str, include_subkinds: bool = False) -> list[int]:
        if kind not in self.taxonomy:
            raise TaxonomyError(f"unknown node kind {kind!r}")
        if not include_subkinds:
            return list(self._by_kind.get(kind, ()))
        kinds = set(self.taxonomy.subkinds(kind))
        return sorted(n for k in kinds for n in self._by_kind.get(k, ()))

    def nodes_by_name(self, name: str) -> list[int]:
        return list(self._by_name.get(name, ()))

    def edges_with_label(self, label: EdgeLabel | str) -> list[Edge]:
        label = EdgeLabel(label)
        return [e for e in self.edges if e.label is label]

    def enclosing(self, node_id: int, kind: str) -> int | None:
        """Nearest AST ancestor (inclusive) whose kind is a subkind of ``kind``."""
        current: int | None = node_id
        while current is not None:
            if self.is_a(current, kind):
                return current
            current = self.ast_parent(current)
        return None
