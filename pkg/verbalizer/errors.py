from __future__ import annotations


class VerbalizerError(Exception):
    """Base class for every error raised by the verbalizer.

    ``stage`` names the pipeline stage the error escaped from; it is filled in
    by :mod:`verbalizer.pipeline` and stays ``None`` for direct library calls.
    """

    def __init__(self, message: str, *, stage: str | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.stage = stage

    def __str__(self) -> str:
        if self.stage:
            return f"[{self.stage}] {self.message}"
        return self.message


# ----------------------------------------------------------------------
# RDF data model / parsing
# ----------------------------------------------------------------------
class TermError(VerbalizerError, ValueError):
    """An IRI or literal violates the data model."""


class RdfSyntaxError(VerbalizerError):
    """``line``/``column`` are 1-based; either may be ``None`` when the parser gave no position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        if line is not None and column is not None:
            message = f"{message} (line {line}, column {column})"
        elif line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.line = line
        self.column = column


class UnterminatedLiteralError(RdfSyntaxError):
    pass


class RelativeIriError(RdfSyntaxError):
    pass


class UnknownPrefixError(RdfSyntaxError):
    pass


class UnsupportedConstructError(RdfSyntaxError):
    pass


# ----------------------------------------------------------------------
# Knowledge base
# ----------------------------------------------------------------------
class KnowledgeBaseError(VerbalizerError):
    pass


class EndpointUnreachableError(KnowledgeBaseError):
    pass


class NoTypeFoundError(KnowledgeBaseError):
    def __init__(self, resource: str) -> None:
        super().__init__(f"No rdf:type statement found for <{resource}>")
        self.resource = resource


# ----------------------------------------------------------------------
# Linguistic resources
# ----------------------------------------------------------------------
class LexiconError(VerbalizerError):
    pass


class MalformedRowError(LexiconError):
    def __init__(self, path: str, line: int, detail: str) -> None:
        super().__init__(f"{path}:{line}: {detail}")
        self.path = path
        self.line = line


class MissingVerbFormsError(LexiconError):
    pass


class ConjugationError(VerbalizerError):
    def __init__(self, lemma: str) -> None:
        super().__init__(f"Cannot conjugate verb '{lemma}': not in the table and not regular")
        self.lemma = lemma


# ----------------------------------------------------------------------
# Pipeline
# ----------------------------------------------------------------------
class ConfigError(VerbalizerError):
    pass


class EmptySelectionError(VerbalizerError):
    def __init__(self, resource: str) -> None:
        super().__init__(f"No verbalizable facts selected for <{resource}>")
        self.resource = resource
