"""Exception hierarchy shared by all cpg modules."""

from __future__ import annotations


class CpgError(Exception):
    """Base class for every error raised by this package."""


class TaxonomyError(CpgError):
    """A node kind is not registered, or a registration is malformed."""


class IntegrityError(CpgError):
    """An operation referenced a node id that is not in the graph."""


class EdgeAttributeError(CpgError):
    """An edge carries attributes that are illegal for its label."""


class SchemaError(CpgError):
    """A serialized document does not match its schema.

    ``path`` is a JSON-path-like pointer (``$.nodes[3].kind``) to the
    offending element.
    """

    def __init__(self, message: str, path: str = "$") -> None:
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


class IngestionError(SchemaError):
    """A generic AST document could not be ingested."""


class UnsupportedLanguageError(CpgError):
    def __init__(self, path: str, extension: str) -> None:
        super().__init__(f"unsupported language for {path!r} (extension {extension!r})")
        self.path = path
        self.extension = extension


class ScopeError(CpgError):
    """Misuse of the scope stack (e.g. leaving the global scope)."""


class ConfigurationError(CpgError):
    """Pass or check configuration is inconsistent (cycles, wrong DFG mode)."""


class QueryError(CpgError):
    """A graph query referenced unknown nodes or labels."""
