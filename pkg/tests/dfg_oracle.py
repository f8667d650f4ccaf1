"""Reference def-use oracle for loop-free programs.

A small generator writes random C functions made of declarations,
assignments and if/else statements.  Next to the source text it keeps its
own statement tree with the position of every identifier, and an
interpreter walks that tree once per combination of branch outcomes,
recording which write each read observes.  Nothing here touches the
analysis package.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

Pos = tuple[int, int]
Writer = tuple  # ("param", name) or ("at", line, col)


@dataclass
class Operand:
    var: str | None
    value: int = 0
    pos: Pos = (0, 0)


@dataclass
class Expr:
    operands: list[Operand]
    ops: list[str]


@dataclass
class Decl:
    var: str
    init: Expr | None
    pos: Pos = (0, 0)


@dataclass
class Assign:
    var: str
    value: Expr
    pos: Pos = (0, 0)


@dataclass
class If:
    cond: Expr
    then: list
    other: list | None
    index: int


@dataclass
class Return:
    value: Expr


@dataclass
class Program:
    params: list[str]
    body: list
    branches: int
    source: str = ""


# -- generation ---------------------------------------------------------------------


class _Generator:
    def __init__(self, rng: random.Random, max_branches: int) -> None:
        self.rng = rng
        self.max_branches = max_branches
        self.branches = 0
        self.params = [f"p{i}" for i in range(rng.randint(1, 3))]
        self.locals = [f"v{i}" for i in range(rng.randint(2, 5))]

    def expr(self) -> Expr:
        count = self.rng.randint(1, 3)
        operands = []
        for _ in range(count):
            if self.rng.random() < 0.75:
                operands.append(Operand(self.rng.choice(self.params + self.locals)))
            else:
                operands.append(Operand(None, self.rng.randint(0, 9)))
        ops = [self.rng.choice("+-*") for _ in range(count - 1)]
        return Expr(operands, ops)

    def condition(self) -> Expr:
        left = Operand(self.rng.choice(self.params + self.locals))
        if self.rng.random() < 0.5:
            return Expr([left], [])
        return Expr([left, Operand(None, self.rng.randint(0, 5))], [self.rng.choice(["<", ">", "=="])])

    def block(self, depth: int) -> list:
        stmts = []
        for _ in range(self.rng.randint(1, 4)):
            roll = self.rng.random()
            if roll < 0.35 and depth < 3 and self.branches < self.max_branches:
                index = self.branches
                self.branches += 1
                then = self.block(depth + 1)
                other = self.block(depth + 1) if self.rng.random() < 0.6 else None
                stmts.append(If(self.condition(), then, other, index))
            else:
                stmts.append(Assign(self.rng.choice(self.locals), self.expr()))
        return stmts

    def program(self) -> Program:
        body: list = []
        for var in self.locals:
            init = self.expr() if self.rng.random() < 0.7 else None
            body.append(Decl(var, init))
            # only earlier names may appear in an initializer
        body.extend(self.block(0))
        body.append(Return(self.expr()))
        return Program(self.params, body, self.branches)


class _Writer:
    """Emits source text and fills in identifier positions as it goes."""

    def __init__(self) -> None:
        self.lines: list[str] = []
        self.current = ""

    def put(self, text: str) -> Pos:
        pos = (len(self.lines) + 1, len(self.current) + 1)
        self.current += text
        return pos

    def newline(self) -> None:
        self.lines.append(self.current)
        self.current = ""

    def expr(self, expr: Expr) -> None:
        for i, operand in enumerate(expr.operands):
            if i:
                self.put(f" {expr.ops[i - 1]} ")
            if operand.var is None:
                self.put(str(operand.value))
            else:
                operand.pos = self.put(operand.var)

    def block(self, stmts: list, indent: int) -> None:
        for stmt in stmts:
            self.put("  " * indent)
            if isinstance(stmt, Decl):
                self.put("int ")
                stmt.pos = self.put(stmt.var)
                if stmt.init is not None:
                    self.put(" = ")
                    self.expr(stmt.init)
                self.put(";")
            elif isinstance(stmt, Assign):
                stmt.pos = self.put(stmt.var)
                self.put(" = ")
                self.expr(stmt.value)
                self.put(";")
            elif isinstance(stmt, Return):
                self.put("return ")
                self.expr(stmt.value)
                self.put(";")
            else:
                self.put("if (")
                self.expr(stmt.cond)
                self.put(") {")
                self.newline()
                self.block(stmt.then, indent + 1)
                self.put("  " * indent + "}")
                if stmt.other is not None:
                    self.put(" else {")
                    self.newline()
                    self.block(stmt.other, indent + 1)
                    self.put("  " * indent + "}")
            self.newline()


def _declared_before_use(program: Program) -> None:
    # initializers may only read parameters and locals declared above them
    seen = set(program.params)
    for stmt in program.body:
        if not isinstance(stmt, Decl):
            break
        if stmt.init is not None:
            for operand in stmt.init.operands:
                if operand.var is not None and operand.var not in seen:
                    operand.var = None
                    operand.value = 7
        seen.add(stmt.var)


def generate(seed: int, max_branches: int = 10) -> Program:
    """A random loop-free function with at most ``max_branches`` if statements."""
    program = _Generator(random.Random(seed), max_branches).program()
    _declared_before_use(program)
    out = _Writer()
    out.put("int f(" + ", ".join(f"int {p}" for p in program.params) + ") {")
    out.newline()
    out.block(program.body, 1)
    out.put("}")
    out.newline()
    program.source = "\n".join(out.lines) + "\n"
    return program


# -- interpretation -----------------------------------------------------------------


@dataclass
class _State:
    env: dict[str, Writer]
    pairs: set[tuple[Writer, Pos]] = field(default_factory=set)


def _read(state: _State, expr: Expr) -> None:
    for operand in expr.operands:
        if operand.var is not None and operand.var in state.env:
            state.pairs.add((state.env[operand.var], operand.pos))


def _execute(stmts: list, outcomes: tuple[bool, ...], state: _State) -> bool:
    """Run ``stmts``; False once a return has been executed."""
    for stmt in stmts:
        if isinstance(stmt, Decl):
            if stmt.init is not None:
                _read(state, stmt.init)
                state.env[stmt.var] = ("at", *stmt.pos)
            else:
                state.env.pop(stmt.var, None)
        elif isinstance(stmt, Assign):
            _read(state, stmt.value)
            state.env[stmt.var] = ("at", *stmt.pos)
        elif isinstance(stmt, Return):
            _read(state, stmt.value)
            return False
        else:
            _read(state, stmt.cond)
            branch = stmt.then if outcomes[stmt.index] else stmt.other
            if branch is not None and not _execute(branch, outcomes, state):
                return False
    return True


def def_use_pairs(program: Program) -> set[tuple[Writer, Pos]]:
    """All (writer, read position) pairs seen over every branch outcome."""
    pairs: set[tuple[Writer, Pos]] = set()
    for outcomes in itertools.product((True, False), repeat=program.branches):
        state = _State({p: ("param", p) for p in program.params})
        _execute(program.body, outcomes, state)
        pairs |= state.pairs
    return pairs
