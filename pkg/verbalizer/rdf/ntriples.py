from __future__ import annotations

import logging
from typing import TextIO

import rdflib
from rdflib.exceptions import ParserError

from verbalizer.errors import RdfSyntaxError
from verbalizer.rdf.syntax import check_subset, read_text, to_triples
from verbalizer.rdf.terms import Graph

logger = logging.getLogger(__name__)


def parse_ntriples(source: str | TextIO) -> Graph:
    """Parse N-Triples (without blank nodes) into a :class:`Graph`."""
    text = read_text(source)
    check_subset(text, None)
    if not text.strip():
        return Graph()
    try:
        parsed = rdflib.Graph().parse(data=_terminated(text), format="nt")
    except ParserError as exc:
        line, reason = _failing_line(text)
        raise RdfSyntaxError(reason or str(exc), line, 1 if line else None) from exc
    graph = Graph.of(to_triples(parsed))
    logger.debug("Parsed %d N-Triples statements", len(graph))
    return graph


def serialize_ntriples(graph: Graph) -> str:
    """Canonical N-Triples: one sorted, terminated line per triple."""
    return "".join(triple.n3() + "\n" for triple in graph)


def _terminated(text: str) -> str:
    return text if text.endswith("\n") else text + "\n"


def _failing_line(text: str) -> tuple[int | None, str | None]:
    """rdflib reports N-Triples errors without a position; find the line that fails on its own."""
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        try:
            rdflib.Graph().parse(data=line + "\n", format="nt")
        except ParserError as exc:
            return lineno, str(exc)
    return None, None
