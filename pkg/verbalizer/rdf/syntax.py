"""Glue between rdflib's parsers and the verbalizer's RDF terms.

rdflib does the actual parsing. :func:`check_subset` runs first and scans the
text once for what the verbalizer refuses (blank nodes, collections, base
IRIs, long strings, relative IRIs, undeclared prefixes) so those errors keep
an exact line and column.
"""
from __future__ import annotations

import re
from typing import Iterable, Iterator, TextIO

import rdflib

from verbalizer.errors import (
    RdfSyntaxError,
    RelativeIriError,
    TermError,
    UnknownPrefixError,
    UnsupportedConstructError,
    UnterminatedLiteralError,
)
from verbalizer.rdf.terms import Iri, Literal, Term, Triple

_LOCAL_ESC = r"\\[_~.\-!$&'()*+,;=/?#@%]"
_PREFIX = r"(?:[^\W\d_](?:[\w\-.]*[\w\-])?)?"
_LOCAL = rf"(?:(?:[\w:%]|{_LOCAL_ESC})(?:(?:[\w\-.:%]|{_LOCAL_ESC})*(?:[\w\-:%]|{_LOCAL_ESC}))?)?"

_SCAN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<iri><[^<>"{}|^`\\\x00-\x20]*(?:\\[uU][0-9A-Fa-f]+[^<>"{}|^`\\\x00-\x20]*)*>)
  | (?P<long_string>\"\"\"|''')
  | (?P<string>"(?:[^"\\\n\r]|\\.)*"|'(?:[^'\\\n\r]|\\.)*')
  | (?P<open_quote>["'])
  | (?P<at>@[A-Za-z][A-Za-z0-9\-]*)
  | (?P<bnode>_:)
  | (?P<pname>"""
    + _PREFIX
    + ":"
    + _LOCAL
    + r""")
  | (?P<word>[A-Za-z]+)
  | (?P<bracket>[\[\]()])
  | (?P<brace>[{}])
  | (?P<other>.)
    """,
    re.VERBOSE | re.DOTALL,
)

_SCHEME = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")


def read_text(source: str | TextIO) -> str:
    if isinstance(source, str):
        return source
    return source.read()


def position(text: str, offset: int) -> tuple[int, int]:
    """1-based line and column of *offset* in *text*."""
    line_start = text.rfind("\n", 0, offset) + 1
    return text.count("\n", 0, offset) + 1, offset - line_start + 1


# ----------------------------------------------------------------------
# Subset check
# ----------------------------------------------------------------------
def check_subset(text: str, prefixes: Iterable[str] | None) -> None:
    """Raise on the first construct outside the accepted subset.

    *prefixes* are the prefix names bound before the document starts; ``None``
    means N-Triples, where prefixed names and directives are not allowed.
    """
    ntriples = prefixes is None
    declared = set(prefixes or ())
    declaring = False
    previous_kind, previous_end = None, -1
    offset = 0

    def fail(cls: type[RdfSyntaxError], message: str) -> RdfSyntaxError:
        return cls(message, *position(text, offset))

    for match in _SCAN_RE.finditer(text):
        kind, raw, offset = match.lastgroup, match.group(), match.start()
        if kind == "ws":
            continue
        if kind == "open_quote":
            raise fail(UnterminatedLiteralError, "Unterminated literal")
        if kind == "long_string":
            raise fail(UnsupportedConstructError, "Long (triple-quoted) strings are not supported")
        if kind == "bnode" or raw in ("[", "]"):
            raise fail(UnsupportedConstructError, "Blank nodes are not supported")
        if raw in ("(", ")"):
            raise fail(UnsupportedConstructError, "RDF collections are not supported")
        if kind == "brace":
            raise fail(UnsupportedConstructError, "Formulae and graph blocks are not supported")
        if kind == "iri":
            if not _SCHEME.match(raw[1:-1]):
                raise fail(RelativeIriError, f"Relative IRI {raw} (no base is supported)")
            declaring = False
        elif kind == "string" and ntriples and raw.startswith("'"):
            raise fail(RdfSyntaxError, "N-Triples strings must use double quotes")
        elif kind in ("at", "word") and not (kind == "at" and previous_kind == "string" and previous_end == offset):
            # "@pt" glued to a string is a language tag, not a directive
            directive = raw.lstrip("@").lower()
            if directive == "base":
                raise fail(UnsupportedConstructError, "Base IRIs are not supported")
            if directive == "prefix":
                if ntriples:
                    raise fail(RdfSyntaxError, "Directives are not allowed in N-Triples")
                declaring = True
        elif kind == "pname":
            if ntriples:
                raise fail(RdfSyntaxError, f"Prefixed name {raw!r} is not allowed in N-Triples")
            prefix = raw.split(":", 1)[0]
            if declaring:
                declared.add(prefix)
            elif prefix not in declared:
                raise fail(UnknownPrefixError, f"Unknown prefix '{prefix}:'")
        previous_kind, previous_end = kind, match.end()


# ----------------------------------------------------------------------
# rdflib conversion
# ----------------------------------------------------------------------
def to_term(node: rdflib.term.Node) -> Term:
    if isinstance(node, rdflib.URIRef):
        return Iri(str(node))
    if isinstance(node, rdflib.Literal):
        datatype = Iri(str(node.datatype)) if node.datatype is not None else None
        return Literal(str(node), datatype, node.language)
    raise UnsupportedConstructError(f"Blank node {node.n3()} is not supported")


def to_triples(graph: rdflib.Graph) -> Iterator[Triple]:
    for s, p, o in graph:
        try:
            yield Triple(to_term(s), to_term(p), to_term(o))
        except TermError as exc:
            raise RdfSyntaxError(exc.message) from exc


def error_reason(exc: Exception) -> str:
    return str(getattr(exc, "_why", None) or exc)


def error_position(exc: Exception, text: str, skipped: int = 0) -> tuple[int | None, int | None]:
    """Where in *text* an rdflib error points; *skipped* characters were prepended before parsing."""
    offset = getattr(exc, "_i", None)
    if isinstance(offset, int) and offset >= skipped:
        return position(text, min(offset - skipped, len(text)))
    return None, None
