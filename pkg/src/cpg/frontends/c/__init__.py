"""Built-in frontend for a small C subset."""

from cpg.frontends.c.parser import ParseError, Parser, Syntax, parse
from cpg.frontends.c.translator import insert_implicit, translate, translate_source

EXTENSIONS = (".c", ".h")

__all__ = [
    "EXTENSIONS", "ParseError", "Parser", "Syntax", "insert_implicit", "parse",
    "translate", "translate_source",
]
