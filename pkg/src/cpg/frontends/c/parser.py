"""Recursive-descent parser for the C subset.

Produces a light concrete tree of :class:`Syntax` nodes.  Syntax errors never
escape :func:`parse`: the failing statement (or top-level declaration) is
skipped up to the next ``;`` or ``}`` and replaced by an ``error`` node that
spans the skipped tokens.

Grammar summary::

    unit      := (struct_decl | function | global_vars)*
    type      := ('int' | 'char' | 'void' | 'struct' IDENT) '*'*
    statement := block | if | while | do | for | return | break | continue
               | switch | goto | declaration | ';' | expr ';'
    expr      := assignment with C precedence for ?: || && == != < > <= >=
                 + - * / % and unary - ! * &, postfix calls . ->
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from cpg.frontends.c.lexer import TYPE_KEYWORDS, Token, tokenize, unescape

# Each nesting level costs roughly a dozen Python frames.
MAX_DEPTH = 60


@dataclass
class Syntax:
    kind: str
    start: int  # source offset
    end: int  # source offset, exclusive
    attrs: dict[str, Any] = field(default_factory=dict)
    children: list[tuple[str, Syntax]] = field(default_factory=list)

    def child(self, role: str) -> Syntax | None:
        for r, c in self.children:
            if r == role:
                return c
        return None

    def all(self, role: str) -> list[Syntax]:
        return [c for r, c in self.children if r == role]

    def walk(self):
        yield self
        for _, c in self.children:
            yield from c.walk()

    def __repr__(self) -> str:
        return f"Syntax({self.kind}, {self.start}:{self.end}, {self.attrs})"


class ParseError(Exception):
    def __init__(self, message: str, token: Token) -> None:
        super().__init__(f"{token.line}:{token.col}: {message} (found {token.text or 'end of input'!r})")
        self.token = token


_BINARY_LEVELS: tuple[tuple[str, ...], ...] = (
    ("||",),
    ("&&",),
    ("==", "!="),
    ("<", ">", "<=", ">="),
    ("+", "-"),
    ("*", "/", "%"),
)


class Parser:
    def __init__(self, source: str) -> None:
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0
        self.depth = 0
        self.errors: list[ParseError] = []

    # -- token helpers -------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.type != "EOF":
            self.pos += 1
        return token

    def at(self, *texts: str) -> bool:
        return self.tok.is_(*texts)

    def accept(self, *texts: str) -> Token | None:
        if self.at(*texts):
            return self.advance()
        return None

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise ParseError(f"expected {text!r}", self.tok)
        return self.advance()

    def expect_ident(self) -> Token:
        if self.tok.type != "IDENT":
            raise ParseError("expected identifier", self.tok)
        return self.advance()

    @property
    def last_end(self) -> int:
        return self.tokens[self.pos - 1].end if self.pos > 0 else 0

    def node(self, kind: str, start: int, children=(), **attrs: Any) -> Syntax:
        return Syntax(kind, start, self.last_end, dict(attrs), list(children))

    def _enter(self) -> None:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError("nesting too deep", self.tok)

    # -- recovery -------------------------------------------------------------

    def recover(self, start_pos: int, error: ParseError, top_level: bool) -> Syntax:
        """Skip from ``start_pos`` to the next ``;`` or ``}`` and return an error node."""
        self.errors.append(error)
        self.pos = start_pos
        first = self.tok
        while self.tok.type != "EOF":
            if self.at(";"):
                self.advance()
                break
            if self.at("}"):
                if top_level or self.pos == start_pos:
                    self.advance()
                break
            self.advance()
        if self.pos == start_pos and self.tok.type != "EOF":
            self.advance()
        end = self.last_end if self.pos > start_pos else first.end
        return Syntax("error", first.start, max(end, first.start), {"message": str(error)})

    # -- top level --------------------------------------------------------------

    def parse_unit(self) -> Syntax:
        children = []
        while self.tok.type != "EOF":
            start_pos = self.pos
            try:
                self.depth = 0
                decls = self.external_declaration()
            except ParseError as err:
                decls = [self.recover(start_pos, err, top_level=True)]
            children.extend(("decl", d) for d in decls)
        return Syntax("translation_unit", 0, len(self.source), {}, children)

    def at_type(self) -> bool:
        return self.tok.type == "KEYWORD" and self.tok.text in TYPE_KEYWORDS

    def base_type(self) -> str:
        token = self.tok
        if token.is_("int", "char", "void"):
            self.advance()
            return token.text
        if token.is_("struct"):
            self.advance()
            return "struct " + self.expect_ident().text
        raise ParseError("expected type", token)

    def pointer_suffix(self) -> str:
        stars = ""
        while self.accept("*"):
            stars += "*"
        return stars

    def external_declaration(self) -> list[Syntax]:
        start = self.tok.start
        if self.at("struct") and self.peek(1).type == "IDENT" and self.peek(2).is_("{"):
            record = self.struct_declaration()
            self.expect(";")
            record.end = self.last_end
            return [record]
        base = self.base_type()
        stars = self.pointer_suffix()
        name = self.expect_ident()
        if self.at("("):
            return [self.function(start, base + stars, name)]
        decls = self.var_declarators(base, stars, name)
        self.expect(";")
        return decls

    def struct_declaration(self) -> Syntax:
        start = self.expect("struct").start
        name = self.expect_ident().text
        self.expect("{")
        fields = []
        while not self.at("}"):
            if self.tok.type == "EOF":
                raise ParseError("unterminated struct", self.tok)
            base = self.base_type()
            while True:
                stars = self.pointer_suffix()
                ident = self.expect_ident()
                fields.append(("field", Syntax("field", ident.start, ident.end,
                                               {"name": ident.text, "type": base + stars})))
                if not self.accept(","):
                    break
            self.expect(";")
        self.expect("}")
        return self.node("struct", start, fields, name=name)

    def function(self, start: int, return_type: str, name: Token) -> Syntax:
        self.expect("(")
        params = []
        if self.at("void") and self.peek().is_(")"):
            self.advance()
        elif not self.at(")"):
            while True:
                pstart = self.tok.start
                ptype = self.base_type() + self.pointer_suffix()
                pname = None
                if self.tok.type == "IDENT":
                    pname = self.advance().text
                params.append(("param", self.node("param", pstart, name=pname, type=ptype)))
                if not self.accept(","):
                    break
        self.expect(")")
        children = list(params)
        has_body = False
        if self.at("{"):
            children.append(("body", self.block()))
            has_body = True
        else:
            self.expect(";")
        return self.node("function", start, children, name=name.text,
                         return_type=return_type, has_body=has_body)

    def var_declarators(self, base: str, stars: str, name: Token) -> list[Syntax]:
        decls = []
        while True:
            children = []
            if self.accept("="):
                children.append(("init", self.assignment()))
            decls.append(self.node("var", name.start, children, name=name.text, type=base + stars))
            if not self.accept(","):
                return decls
            stars = self.pointer_suffix()
            name = self.expect_ident()

    # -- statements -------------------------------------------------------------

    def block(self) -> Syntax:
        start = self.expect("{").start
        stmts = []
        while not self.at("}"):
            if self.tok.type == "EOF":
                # Incomplete code: keep what was parsed instead of discarding the block.
                self.errors.append(ParseError("expected '}'", self.tok))
                return self.node("block", start, stmts, unterminated=True)
            stmts.append(("stmt", self.statement_recovering()))
        self.expect("}")
        return self.node("block", start, stmts)

    def statement_recovering(self) -> Syntax:
        start_pos = self.pos
        depth = self.depth
        try:
            return self.statement()
        except ParseError as err:
            self.depth = depth
            return self.recover(start_pos, err, top_level=False)

    def statement(self) -> Syntax:
        self._enter()
        try:
            return self._statement()
        finally:
            self.depth -= 1

    def _statement(self) -> Syntax:
        tok = self.tok
        start = tok.start
        if tok.is_("{"):
            return self.block()
        if tok.is_("if"):
            self.advance()
            self.expect("(")
            cond = self.expression()
            self.expect(")")
            children = [("cond", cond), ("then", self.statement_recovering())]
            if self.accept("else"):
                children.append(("else", self.statement_recovering()))
            return self.node("if", start, children)
        if tok.is_("while"):
            self.advance()
            self.expect("(")
            cond = self.expression()
            self.expect(")")
            return self.node("while", start, [("cond", cond), ("body", self.statement_recovering())])
        if tok.is_("do"):
            self.advance()
            body = self.statement_recovering()
            self.expect("while")
            self.expect("(")
            cond = self.expression()
            self.expect(")")
            self.expect(";")
            return self.node("do", start, [("body", body), ("cond", cond)])
        if tok.is_("for"):
            return self.for_statement()
        if tok.is_("return"):
            self.advance()
            children = [] if self.at(";") else [("value", self.expression())]
            self.expect(";")
            return self.node("return", start, children)
        if tok.is_("break", "continue"):
            self.advance()
            self.expect(";")
            return self.node(tok.text, start)
        if tok.is_("switch"):
            return self.switch_statement()
        if tok.is_("goto"):
            self.advance()
            label = self.expect_ident().text
            self.expect(";")
            return self.node("goto", start, label=label)
        if tok.is_(";"):
            self.advance()
            return self.node("empty", start)
        if self.at_type():
            return self.local_declaration()
        expr = self.expression()
        self.expect(";")
        return self.node("expr_stmt", start, [("expr", expr)])

    def local_declaration(self) -> Syntax:
        start = self.tok.start
        if self.at("struct") and self.peek(1).type == "IDENT" and self.peek(2).is_("{"):
            record = self.struct_declaration()
            self.expect(";")
            record.end = self.last_end
            return record
        base = self.base_type()
        stars = self.pointer_suffix()
        name = self.expect_ident()
        decls = self.var_declarators(base, stars, name)
        self.expect(";")
        return self.node("decl_stmt", start, [("decl", d) for d in decls])

    def for_statement(self) -> Syntax:
        start = self.expect("for").start
        self.expect("(")
        children = []
        if self.at_type():
            children.append(("init", self.local_declaration()))
        elif self.accept(";"):
            pass
        else:
            istart = self.tok.start
            expr = self.expression()
            self.expect(";")
            children.append(("init", Syntax("expr_stmt", istart, self.last_end, {}, [("expr", expr)])))
        if not self.at(";"):
            children.append(("cond", self.expression()))
        self.expect(";")
        if not self.at(")"):
            children.append(("iter", self.expression()))
        self.expect(")")
        children.append(("body", self.statement_recovering()))
        return self.node("for", start, children)

    def switch_statement(self) -> Syntax:
        """Recognized but not translated: the body is skipped as a balanced block."""
        start = self.expect("switch").start
        self.expect("(")
        self.expression()
        self.expect(")")
        self.expect("{")
        depth = 1
        while depth:
            if self.tok.type == "EOF":
                raise ParseError("unterminated switch", self.tok)
            if self.at("{"):
                depth += 1
            elif self.at("}"):
                depth -= 1
            self.advance()
        return self.node("switch", start)

    # -- expressions -----------------------------------------------------------

    def expression(self) -> Syntax:
        return self.assignment()

    def assignment(self) -> Syntax:
        self._enter()
        try:
            lhs = self.ternary()
            if self.accept("="):
                rhs = self.assignment()
                return Syntax("binary", lhs.start, rhs.end, {"op": "="}, [("lhs", lhs), ("rhs", rhs)])
            return lhs
        finally:
            self.depth -= 1

    def ternary(self) -> Syntax:
        cond = self.binary(0)
        if self.accept("?"):
            then = self.expression()
            self.expect(":")
            other = self.ternary_nested()
            return Syntax("ternary", cond.start, other.end, {},
                          [("cond", cond), ("then", then), ("else", other)])
        return cond

    def ternary_nested(self) -> Syntax:
        self._enter()
        try:
            return self.ternary()
        finally:
            self.depth -= 1

    def binary(self, level: int) -> Syntax:
        if level == len(_BINARY_LEVELS):
            return self.unary()
        lhs = self.binary(level + 1)
        while self.tok.type == "PUNCT" and self.tok.text in _BINARY_LEVELS[level]:
            op = self.advance().text
            rhs = self.binary(level + 1)
            lhs = Syntax("binary", lhs.start, rhs.end, {"op": op}, [("lhs", lhs), ("rhs", rhs)])
        return lhs

    def unary(self) -> Syntax:
        if self.at("-", "!", "*", "&"):
            self._enter()
            try:
                op = self.advance()
                operand = self.unary()
                return Syntax("unary", op.start, operand.end, {"op": op.text}, [("operand", operand)])
            finally:
                self.depth -= 1
        return self.postfix()

    def postfix(self) -> Syntax:
        expr = self.primary()
        while True:
            if self.at("("):
                if expr.kind != "ident":
                    raise ParseError("only named functions can be called", self.tok)
                args = self.arguments()
                expr = Syntax("call", expr.start, self.last_end, {"name": expr.attrs["name"]},
                              [("arg", a) for a in args])
            elif self.at(".", "->"):
                op = self.advance().text
                member = self.expect_ident()
                if self.at("("):
                    args = self.arguments()
                    expr = Syntax("member_call", expr.start, self.last_end,
                                  {"op": op, "name": member.text},
                                  [("base", expr)] + [("arg", a) for a in args])
                else:
                    expr = Syntax("member", expr.start, member.end, {"op": op, "name": member.text},
                                  [("base", expr)])
            else:
                return expr

    def arguments(self) -> list[Syntax]:
        self.expect("(")
        args = []
        if not self.at(")"):
            while True:
                args.append(self.assignment())
                if not self.accept(","):
                    break
        self.expect(")")
        return args

    def primary(self) -> Syntax:
        tok = self.tok
        if tok.type == "INT":
            self.advance()
            return Syntax("int", tok.start, tok.end, {"value": int(tok.text)})
        if tok.type == "CHAR":
            self.advance()
            return Syntax("char", tok.start, tok.end, {"value": unescape(tok.text[1:-1])})
        if tok.type == "STRING":
            self.advance()
            return Syntax("string", tok.start, tok.end, {"value": unescape(tok.text[1:-1])})
        if tok.is_("NULL"):
            self.advance()
            return Syntax("null", tok.start, tok.end, {"value": None})
        if tok.type == "IDENT":
            self.advance()
            return Syntax("ident", tok.start, tok.end, {"name": tok.text})
        if tok.is_("("):
            self._enter()
            try:
                self.advance()
                inner = self.expression()
                self.expect(")")
                return inner
            finally:
                self.depth -= 1
        raise ParseError("expected expression", tok)


def parse(source: str) -> Syntax:
    """Parse C-subset ``source`` into a syntax tree; never raises on bad input."""
    return Parser(source).parse_unit()
