"""Tokenizer for the C subset.

Comments are dropped.  Characters that cannot start any token become
``ERROR`` tokens instead of raising, so the parser can recover from them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

KEYWORDS = frozenset({
    "int", "char", "void", "struct", "if", "else", "while", "do", "for",
    "return", "break", "continue", "switch", "case", "default", "goto", "NULL",
})

TYPE_KEYWORDS = frozenset({"int", "char", "void", "struct"})

# Longest alternatives first.
_PUNCT = sorted(
    ["->", "==", "!=", "<=", ">=", "&&", "||",
     "+", "-", "*", "/", "%", "<", ">", "=", "!", "&", "?", ":",
     "(", ")", "{", "}", ";", ",", "."],
    key=len, reverse=True,
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n\f\v]+)
  | (?P<line_comment>//[^\n]*)
  | (?P<block_comment>/\*(?:.|\n)*?(?:\*/|\Z))
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<number>[0-9]+[A-Za-z0-9_]*)
  | (?P<char>'(?:\\.|[^'\\\n])*'?)
  | (?P<string>"(?:\\.|[^"\\\n])*"?)
  | (?P<punct>""" + "|".join(re.escape(p) for p in _PUNCT) + r""")
  | (?P<error>.)
    """,
    re.VERBOSE | re.DOTALL,
)


@dataclass(frozen=True)
class Token:
    type: str  # KEYWORD, IDENT, INT, CHAR, STRING, PUNCT, ERROR, EOF
    text: str
    start: int  # offset of first character
    end: int  # offset one past the last character
    line: int
    col: int

    def is_(self, *texts: str) -> bool:
        return self.type in ("PUNCT", "KEYWORD") and self.text in texts

    def __repr__(self) -> str:
        return f"Token({self.type}, {self.text!r}, {self.line}:{self.col})"


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        assert match is not None  # the error alternative matches any character
        kind = match.lastgroup
        text = match.group()
        if kind not in ("ws", "line_comment", "block_comment"):
            col = pos - line_start + 1
            if kind == "ident":
                ttype = "KEYWORD" if text in KEYWORDS else "IDENT"
            elif kind == "number":
                ttype = "INT" if text.isdigit() else "ERROR"
            elif kind == "char":
                ttype = "CHAR" if len(text) >= 3 and text.endswith("'") else "ERROR"
            elif kind == "string":
                ttype = "STRING" if len(text) >= 2 and text.endswith('"') else "ERROR"
            elif kind == "punct":
                ttype = "PUNCT"
            else:
                ttype = "ERROR"
            tokens.append(Token(ttype, text, pos, match.end(), line, col))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        pos = match.end()
    tokens.append(Token("EOF", "", len(source), len(source), line, len(source) - line_start + 1))
    return tokens


_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", "0": "\0", "\\": "\\", "'": "'", '"': '"'}


def unescape(body: str) -> str:
    out = []
    chars = iter(body)
    for ch in chars:
        if ch == "\\":
            nxt = next(chars, "")
            out.append(_ESCAPES.get(nxt, nxt))
        else:
            out.append(ch)
    return "".join(out)
