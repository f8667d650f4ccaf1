"""Graph queries shared by the console and the checks."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from cpg.errors import QueryError
from cpg.graph import EdgeLabel, Graph


def parse_labels(labels: Iterable[EdgeLabel | str] | EdgeLabel | str) -> set[EdgeLabel]:
    if isinstance(labels, (str, EdgeLabel)):
        labels = [labels]
    parsed = set()
    for label in labels:
        try:
            parsed.add(EdgeLabel(str(label).upper()))
        except ValueError:
            raise QueryError(f"unknown edge label {label!r}") from None
    return parsed


def _check_node(graph: Graph, node_id: int) -> None:
    if node_id not in graph:
        raise QueryError(f"unknown node id {node_id}")


def exists_path(
    graph: Graph,
    src: int | Iterable[int],
    dst: int,
    labels: Iterable[EdgeLabel | str] | EdgeLabel | str,
) -> list[int] | None:
    """Shortest path of node ids from ``src`` (one id or several) to ``dst``.

    Only edges with a label in ``labels`` are followed.  Returns None when
    ``dst`` is unreachable.
    """
    sources = [src] if isinstance(src, int) else list(src)
    for node_id in (*sources, dst):
        _check_node(graph, node_id)
    wanted = parse_labels(labels)
    parent: dict[int, int | None] = {s: None for s in sources}
    queue = deque(sources)
    while queue:
        node = queue.popleft()
        if node == dst:
            path = [node]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])  # type: ignore[arg-type]
            return path[::-1]
        for edge in graph.out_edges(node):
            if edge.label in wanted and edge.dst not in parent:
                parent[edge.dst] = node
                queue.append(edge.dst)
    return None


def verify_witness(graph: Graph, path: list[int], labels: Iterable[EdgeLabel | str]) -> bool:
    """True if consecutive nodes of ``path`` are joined by an edge with one of ``labels``."""
    wanted = parse_labels(labels)
    if not path or any(n not in graph for n in path):
        return False
    return all(
        any(e.dst == b and e.label in wanted for e in graph.out_edges(a))
        for a, b in zip(path, path[1:])
    )
