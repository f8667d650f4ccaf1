"""Code property graph construction and analysis."""

from cpg.graph import BranchValue, Edge, EdgeLabel, Flag, Graph, Node, SourceLocation
from cpg.taxonomy import TAXONOMY, NodeKind, Taxonomy, is_subkind, register_kind

__version__ = "0.1.0"

__all__ = [
    "TAXONOMY", "BranchValue", "Edge", "EdgeLabel", "Flag", "Graph", "Node", "NodeKind",
    "SourceLocation", "Taxonomy", "is_subkind", "register_kind",
]
