"""Interactive command shell over an in-memory graph."""

from __future__ import annotations

import shlex
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, TextIO

from cpg.analysis import Analysis, FileError, run_pipeline, translate_all
from cpg.checks import CHECKS, run_check
from cpg.errors import CpgError
from cpg.export import export
from cpg.graph import Graph
from cpg.passes import AnalysisTimeout, DfgMode
from cpg.query import exists_path, parse_labels

HELP = """\
commands:
  load <path...>                     translate files or directories
  run-passes [--dfg-mode flow|decl]  run the pass pipeline
  nodes <kind> [--sub]               list nodes of a kind (--sub: include subkinds)
  show <id>                          print one node
  succ <id> <label>                  successors over edges with a label
  pred <id> <label>                  predecessors over edges with a label
  path <from> <to> <label>           shortest path over edges with a label
  check <name>                       run a check ({checks})
  export <json|dot|cypher> <file>    write the graph to a file
  help                               this text
  quit                               leave the console
"""


def help_text() -> str:
    return HELP.format(checks=", ".join(sorted(CHECKS)))


@dataclass
class Session:
    analysis: Analysis = field(default_factory=lambda: Analysis(Graph()))
    passes_done: bool = False
    done: bool = False

    @property
    def graph(self) -> Graph:
        return self.analysis.graph


class CommandError(Exception):
    pass


def _node_id(session: Session, text: str) -> int:
    try:
        node_id = int(text)
    except ValueError:
        raise CommandError(f"not a node id: {text!r}") from None
    if node_id not in session.graph:
        raise CommandError(f"unknown node id {node_id}")
    return node_id


def _describe(graph: Graph, node_id: int) -> str:
    node = graph.node(node_id)
    parts = [f"{node_id}", node.kind]
    if node.name is not None:
        parts.append(repr(node.name))
    if node.location is not None:
        parts.append(f"@ {node.location}")
    if node.flags:
        parts.append("[" + ",".join(sorted(f.value for f in node.flags)) + "]")
    return " ".join(parts)


def _load(session: Session, args: list[str]) -> str:
    if not args:
        raise CommandError("usage: load <path...>")
    lines = []
    if session.passes_done:
        session.analysis = Analysis(Graph())
        session.passes_done = False
        lines.append("passes had already run; started a new graph")
    results, errors = translate_all(session.graph, args)
    session.analysis.results.extend(results)
    session.analysis.errors.extend(errors)
    lines.append(f"translated {len(results)} file(s), graph has {len(session.graph)} nodes")
    lines.extend(f"error: {e}" for e in errors)
    return "\n".join(lines)


def _run_passes(session: Session, args: list[str]) -> str:
    mode = DfgMode.FLOW_SENSITIVE
    if args:
        if len(args) != 2 or args[0] != "--dfg-mode":
            raise CommandError("usage: run-passes [--dfg-mode flow|decl]")
        mode = DfgMode.parse(args[1])
    if session.passes_done:
        raise CommandError("passes already ran on this graph; load files again to start over")
    run_pipeline(session.analysis, mode)
    session.passes_done = True
    timings = session.analysis.pass_seconds
    return "ran " + ", ".join(f"{name} ({secs * 1000:.1f} ms)" for name, secs in timings.items())


def _nodes(session: Session, args: list[str]) -> str:
    if not args or len(args) > 2 or (len(args) == 2 and args[1] != "--sub"):
        raise CommandError("usage: nodes <kind> [--sub]")
    found = session.graph.nodes_by_kind(args[0], include_subkinds=len(args) == 2)
    if not found:
        return "no nodes"
    return "\n".join(_describe(session.graph, n) for n in sorted(found))


def _show(session: Session, args: list[str]) -> str:
    if len(args) != 1:
        raise CommandError("usage: show <id>")
    graph = session.graph
    node_id = _node_id(session, args[0])
    node = graph.node(node_id)
    lines = [_describe(graph, node_id)]
    lines.extend(f"  {key} = {node.properties[key]!r}" for key in sorted(node.properties))
    for edge in graph.ast_child_edges(node_id):
        role = edge.role or ""
        index = f"[{edge.index}]" if edge.index is not None else ""
        lines.append(f"  {role}{index} -> {_describe(graph, edge.dst)}")
    return "\n".join(lines)


def _neighbors(direction: str) -> Callable[[Session, list[str]], str]:
    def command(session: Session, args: list[str]) -> str:
        if len(args) != 2:
            raise CommandError(f"usage: {direction} <id> <label>")
        graph = session.graph
        node_id = _node_id(session, args[0])
        labels = parse_labels(args[1])
        edges = graph.out_edges(node_id) if direction == "succ" else graph.in_edges(node_id)
        lines = []
        for edge in edges:
            if edge.label not in labels:
                continue
            other = edge.dst if direction == "succ" else edge.src
            extra = f" ({edge.branch})" if edge.branch is not None else ""
            lines.append(_describe(graph, other) + extra)
        return "\n".join(lines) if lines else "none"
    return command


def _path(session: Session, args: list[str]) -> str:
    if len(args) != 3:
        raise CommandError("usage: path <from> <to> <label>")
    src, dst = _node_id(session, args[0]), _node_id(session, args[1])
    witness = exists_path(session.graph, src, dst, args[2])
    return "no path" if witness is None else " -> ".join(str(n) for n in witness)


def _check(session: Session, args: list[str]) -> str:
    if len(args) != 1:
        raise CommandError("usage: check <name>")
    if not session.passes_done:
        raise CommandError("run-passes first")
    findings = run_check(args[0], session.graph)
    lines = [str(f) + f"  [witness {' -> '.join(map(str, f.witness))}]" for f in findings]
    lines.append(f"{len(findings)} finding(s)")
    return "\n".join(lines)


def _export(session: Session, args: list[str]) -> str:
    if len(args) != 2:
        raise CommandError("usage: export <json|dot|cypher> <file>")
    fmt, target = args
    try:
        text = export(session.graph, fmt)
    except ValueError as exc:
        raise CommandError(str(exc)) from None
    Path(target).write_text(text, encoding="utf-8")
    return f"wrote {target}"


def _quit(session: Session, args: list[str]) -> str:
    session.done = True
    return "bye"


COMMANDS: dict[str, Callable[[Session, list[str]], str]] = {
    "load": _load,
    "run-passes": _run_passes,
    "nodes": _nodes,
    "show": _show,
    "succ": _neighbors("succ"),
    "pred": _neighbors("pred"),
    "path": _path,
    "check": _check,
    "export": _export,
    "help": lambda session, args: help_text(),
    "quit": _quit,
    "exit": _quit,
}


def repl_command(session: Session, line: str) -> tuple[Session, str]:
    """Execute one command line.  Errors become output; they never propagate."""
    try:
        words = shlex.split(line)
    except ValueError as exc:
        return session, f"error: {exc}"
    if not words:
        return session, ""
    command = COMMANDS.get(words[0])
    if command is None:
        return session, f"unknown command {words[0]!r}\n" + help_text()
    try:
        return session, command(session, words[1:])
    except (CommandError, CpgError, AnalysisTimeout) as exc:
        return session, f"error: {exc}"
    except OSError as exc:
        return session, f"error: {exc.strerror or exc}"
    except Exception as exc:  # a shell session must survive its own bugs
        return session, f"internal error: {type(exc).__name__}: {exc}"


def run_console(session: Session, stdin: TextIO, stdout: TextIO, prompt: str = "cpg> ") -> None:
    while not session.done:
        if prompt:
            stdout.write(prompt)
            stdout.flush()
        line = stdin.readline()
        if not line:
            break
        session, output = repl_command(session, line)
        if output:
            stdout.write(output.rstrip("\n") + "\n")


def session_for(paths: list[str]) -> tuple[Session, list[FileError]]:
    session = Session()
    if paths:
        results, errors = translate_all(session.graph, paths)
        session.analysis.results.extend(results)
        session.analysis.errors.extend(errors)
        return session, errors
    return session, []
