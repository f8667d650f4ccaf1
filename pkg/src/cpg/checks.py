"""Built-in analysis checks, registered by name."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from cpg.errors import ConfigurationError
from cpg.graph import EdgeLabel, Graph, SourceLocation
from cpg.passes import DfgMode
from cpg.query import exists_path


@dataclass(frozen=True)
class Finding:
    check_name: str
    node: int
    location: SourceLocation | None
    message: str
    witness: tuple[int, ...]

    def __str__(self) -> str:
        where = str(self.location) if self.location is not None else f"<node {self.node}>"
        return f"{where}: {self.check_name}: {self.message}"

    def to_dict(self) -> dict:
        loc = self.location
        return {
            "check": self.check_name,
            "node": self.node,
            "location": None if loc is None else {
                "file": loc.file, "startLine": loc.start_line, "startCol": loc.start_col,
                "endLine": loc.end_line, "endCol": loc.end_col,
            },
            "message": self.message,
            "witness": list(self.witness),
        }


Check = Callable[[Graph], list[Finding]]

CHECKS: dict[str, Check] = {}


def register_check(name: str) -> Callable[[Check], Check]:
    def decorate(check: Check) -> Check:
        CHECKS[name] = check
        return check
    return decorate


def run_check(name: str, graph: Graph) -> list[Finding]:
    try:
        check = CHECKS[name]
    except KeyError:
        known = ", ".join(sorted(CHECKS))
        raise ConfigurationError(f"unknown check {name!r} (available: {known})") from None
    return check(graph)


def dereference_sites(graph: Graph) -> list[tuple[int, int]]:
    """(dereferencing expression, dereferenced reference) pairs."""
    sites = []
    for op in graph.nodes_by_kind("UnaryOperator"):
        if graph.node(op).properties.get("operator") == "*":
            target = graph.ast_child(op, "INPUT")
            if target is not None and graph.is_a(target, "DeclaredReferenceExpression"):
                sites.append((op, target))
    for member in graph.nodes_by_kind("MemberExpression"):
        if graph.node(member).properties.get("operator") == "->":
            base = graph.ast_child(member, "BASE")
            if base is not None and graph.is_a(base, "DeclaredReferenceExpression"):
                sites.append((member, base))
    return sorted(sites)


@register_check("null-deref")
def check_null_deref(graph: Graph) -> list[Finding]:
    """Report dereferences that a NULL literal can reach through data flow."""
    if graph.meta.get("dfg_mode") is DfgMode.DECLARATION_LINK:
        raise ConfigurationError("null-deref needs flow-sensitive data flow (run with --dfg-mode flow)")
    nulls = [
        n for n in graph.nodes_by_kind("Literal")
        if "value" in graph.node(n).properties and graph.node(n).properties["value"] is None
    ]
    findings = []
    if not nulls:
        return findings
    for site, ref in dereference_sites(graph):
        witness = exists_path(graph, nulls, ref, EdgeLabel.DFG)
        if witness is None:
            continue
        name = graph.node(ref).name
        findings.append(Finding(
            "null-deref", site, graph.node(site).location,
            f"'{name}' may be NULL when dereferenced", tuple(witness),
        ))
    return findings
