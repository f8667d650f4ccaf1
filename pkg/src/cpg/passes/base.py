from __future__ import annotations

import heapq
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Sequence

from cpg.errors import ConfigurationError
from cpg.graph import EdgeLabel, Graph
from cpg.scopes import Diagnostic, ScopeTree, resolve_across

logger = logging.getLogger(__name__)

UNKNOWN_TYPE = "UNKNOWN"


class DfgMode(str, Enum):
    DECLARATION_LINK = "DECLARATION_LINK"
    FLOW_SENSITIVE = "FLOW_SENSITIVE"

    @classmethod
    def parse(cls, text: str | DfgMode) -> DfgMode:
        if isinstance(text, DfgMode):
            return text
        aliases = {"flow": cls.FLOW_SENSITIVE, "decl": cls.DECLARATION_LINK}
        try:
            return aliases.get(text.lower()) or cls(text.upper())
        except ValueError:
            raise ConfigurationError(f"unknown DFG mode {text!r} (use 'flow' or 'decl')") from None


class AnalysisTimeout(Exception):
    """Raised when a cooperative deadline passes between pipeline steps."""


@dataclass
class PassContext:
    graph: Graph
    scope_trees: list[ScopeTree] = field(default_factory=list)
    dfg_mode: DfgMode = DfgMode.FLOW_SENSITIVE
    diagnostics: list[Diagnostic] = field(default_factory=list)
    completed: list[str] = field(default_factory=list)
    stats: dict[str, object] = field(default_factory=dict)
    _tree_index: dict[int, ScopeTree] | None = field(default=None, repr=False)

    def tree_of(self, node_id: int) -> ScopeTree | None:
        if self._tree_index is None or node_id not in self._tree_index:
            self._tree_index = {n: t for t in self.scope_trees for n in t.node_scopes}
        return self._tree_index.get(node_id)

    def add_tree(self, tree: ScopeTree) -> None:
        self.scope_trees.append(tree)
        self._tree_index = None

    def invalidate_index(self) -> None:
        self._tree_index = None

    def resolve(self, name: str, at_node: int) -> int | None:
        """Resolve ``name`` as seen from the scope in which ``at_node`` was created."""
        tree = self.tree_of(at_node)
        scope = tree.scope_of(at_node) if tree is not None else None
        return resolve_across(self.scope_trees, tree, name, scope)

    def warn(self, message: str, node: int | None = None) -> None:
        self.diagnostics.append(Diagnostic(message, node))


@dataclass(frozen=True)
class Pass:
    name: str
    run: Callable[[PassContext], None]
    depends_on: tuple[str, ...] = ()


def order_passes(passes: Sequence[Pass]) -> list[Pass]:
    """Topologically sort ``passes``; ties go to the earlier registration."""
    by_name = {p.name: p for p in passes}
    position = {p.name: i for i, p in enumerate(passes)}
    for p in passes:
        for dep in p.depends_on:
            if dep not in by_name:
                raise ConfigurationError(f"pass {p.name!r} depends on unregistered pass {dep!r}")
    indegree = {p.name: len(set(p.depends_on)) for p in passes}
    dependents: dict[str, list[str]] = {p.name: [] for p in passes}
    for p in passes:
        for dep in set(p.depends_on):
            dependents[dep].append(p.name)
    ready = [(position[n], n) for n, d in indegree.items() if d == 0]
    heapq.heapify(ready)
    ordered: list[Pass] = []
    while ready:
        _, name = heapq.heappop(ready)
        ordered.append(by_name[name])
        for nxt in dependents[name]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                heapq.heappush(ready, (position[nxt], nxt))
    if len(ordered) != len(passes):
        raise ConfigurationError(f"pass dependency cycle: {' -> '.join(_find_cycle(passes))}")
    return ordered


def _find_cycle(passes: Sequence[Pass]) -> list[str]:
    deps = {p.name: list(p.depends_on) for p in passes}
    state: dict[str, int] = {}
    stack: list[str] = []

    def dfs(name: str) -> list[str] | None:
        state[name] = 1
        stack.append(name)
        for dep in deps[name]:
            if state.get(dep) == 1:
                return stack[stack.index(dep):] + [dep]
            if dep not in state:
                found = dfs(dep)
                if found:
                    return found
        stack.pop()
        state[name] = 2
        return None

    for p in passes:
        if p.name not in state:
            cycle = dfs(p.name)
            if cycle:
                return cycle
    return []


def run_passes(
    ctx: PassContext,
    passes: Iterable[Pass],
    deadline: float | None = None,
) -> dict[str, float]:
    """Run ``passes`` in dependency order; returns seconds spent per pass."""
    timings: dict[str, float] = {}
    for p in order_passes(list(passes)):
        if deadline is not None and time.monotonic() >= deadline:
            raise AnalysisTimeout(f"deadline reached before pass {p.name!r}")
        missing = [d for d in p.depends_on if d not in ctx.completed]
        if missing:
            raise ConfigurationError(f"pass {p.name!r} requires {missing} to run first")
        started = time.perf_counter()
        p.run(ctx)
        timings[p.name] = time.perf_counter() - started
        ctx.completed.append(p.name)
        logger.debug("pass %s finished in %.4fs", p.name, timings[p.name])
    return timings


def refers_to(graph: Graph, node_id: int) -> int | None:
    edges = graph.out_edges(node_id, EdgeLabel.REFERS_TO)
    return edges[0].dst if edges else None


def is_write(graph: Graph, ref: int) -> bool:
    """True if ``ref`` is the target of a plain assignment."""
    parent = graph.ast_parent(ref)
    if parent is None or graph.ast_role(ref) != "LHS":
        return False
    node = graph.node(parent)
    return node.kind == "BinaryOperator" and node.properties.get("operator") == "="
