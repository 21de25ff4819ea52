"""A deliberately small Turtle reader on top of rdflib.

Accepted: ``@prefix``/``PREFIX`` directives, prefixed names, full IRIs, the
``a`` keyword, ``;`` and ``,`` lists, quoted literals with ``@lang`` or
``^^datatype``, numeric and boolean shorthand. Anything that would introduce
a blank node, a collection, a base IRI or a formula is rejected with
:class:`~verbalizer.errors.UnsupportedConstructError` before rdflib sees it.
"""
from __future__ import annotations

import logging
from typing import Mapping, TextIO

import rdflib
from rdflib.exceptions import ParserError

from verbalizer.errors import RdfSyntaxError
from verbalizer.rdf.syntax import check_subset, error_position, error_reason, read_text, to_triples
from verbalizer.rdf.terms import Graph

logger = logging.getLogger(__name__)


def parse_turtle_subset(source: str | TextIO, prefixes: Mapping[str, str] | None = None) -> Graph:
    """Parse the supported Turtle subset.

    ``prefixes`` are defaults (``{"dbo": "http://dbpedia.org/ontology/"}``);
    ``@prefix`` declarations in the document override them from the point they
    appear. The empty key is the default ``:`` prefix.
    """
    text = read_text(source)
    defaults = dict(prefixes or {})
    check_subset(text, defaults)
    if not text.strip():
        return Graph()
    # rdflib has no hook for initial bindings, so defaults go in as directives on one extra line
    header = "".join(f"@prefix {name}: <{namespace}> . " for name, namespace in defaults.items())
    if header:
        header += "\n"
    try:
        parsed = rdflib.Graph().parse(data=header + text, format="turtle")
    except (SyntaxError, ParserError) as exc:
        raise RdfSyntaxError(error_reason(exc), *error_position(exc, text, len(header))) from exc
    graph = Graph.of(to_triples(parsed))
    logger.debug("Parsed %d Turtle statements", len(graph))
    return graph
