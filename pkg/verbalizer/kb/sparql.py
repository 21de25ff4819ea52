from __future__ import annotations

import logging
import threading
import time
from typing import Any, Iterator

import requests

from verbalizer.errors import EndpointUnreachableError, KnowledgeBaseError
from verbalizer.kb.base import Backend
from verbalizer.rdf.terms import Graph, Iri, Literal, Term, Triple

logger = logging.getLogger(__name__)

_RESULTS_JSON = "application/sparql-results+json"


class SparqlEndpoint(Backend):
    """Backend talking SPARQL 1.1 Protocol (GET, JSON results) to a remote endpoint.

    Every distinct query is sent at most once per process: results are kept in
    a cache keyed by ``(url, query)`` and guarded by a lock, so one endpoint
    object can be shared between worker threads.
    """

    name = "sparql"

    def __init__(
        self,
        url: str,
        timeout: float = 30.0,
        retries: int = 3,
        page_size: int = 10000,
        backoff: float = 0.5,
        session: requests.Session | None = None,
    ) -> None:
        self.url = url
        self.timeout = timeout
        self.retries = retries
        self.page_size = page_size
        self.backoff = backoff
        self._own_session = session is None
        self._session = session if session is not None else requests.Session()
        self._session.headers.update({"Accept": _RESULTS_JSON})
        self._cache: dict[tuple[str, str], list[dict[str, Term]]] = {}
        self._lock = threading.Lock()
        self.requests_sent = 0

    # ------------------------------------------------------------------
    # Context manager helpers
    # ------------------------------------------------------------------
    def __enter__(self) -> "SparqlEndpoint":
        logger.debug("Using SPARQL endpoint %s", self.url)
        return self

    def close(self) -> None:
        logger.debug("Closing SPARQL session for %s", self.url)
        if self._own_session:
            self._session.close()

    # ------------------------------------------------------------------
    # Backend queries
    # ------------------------------------------------------------------
    def types_of(self, resource: Iri) -> list[Iri]:
        rows = self.select(f"SELECT DISTINCT ?t WHERE {{ {resource.n3()} a ?t . FILTER(isIRI(?t)) }} ORDER BY ?t")
        return [row["t"] for row in rows if isinstance(row.get("t"), Iri)]

    def superclasses(self, cls: Iri) -> set[Iri]:
        rows = self.select(
            "SELECT DISTINCT ?c WHERE { "
            f"{cls.n3()} <http://www.w3.org/2000/01/rdf-schema#subClassOf>+ ?c . "
            f"FILTER(isIRI(?c) && ?c != {cls.n3()}) }} ORDER BY ?c"
        )
        return {row["c"] for row in rows if isinstance(row.get("c"), Iri)}

    def count_instances(self, cls: Iri) -> int:
        rows = self.select(f"SELECT (COUNT(DISTINCT ?x) AS ?n) WHERE {{ ?x a {cls.n3()} }}", paged=False)
        if not rows or "n" not in rows[0]:
            return 0
        return int(str(rows[0]["n"]))

    def instances(self, cls: Iri) -> list[Iri]:
        rows = self.select(f"SELECT DISTINCT ?x WHERE {{ ?x a {cls.n3()} . FILTER(isIRI(?x)) }} ORDER BY ?x")
        return [row["x"] for row in rows if isinstance(row.get("x"), Iri)]

    def labels(self, resource: Iri, language: str) -> list[Literal]:
        rows = self.select(
            "SELECT DISTINCT ?l WHERE { "
            f"{resource.n3()} <http://www.w3.org/2000/01/rdf-schema#label> ?l . "
            f'FILTER(langMatches(lang(?l), "{language}")) }} ORDER BY ?l'
        )
        return [row["l"] for row in rows if isinstance(row.get("l"), Literal)]

    def describe(self, resource: Iri) -> list[Triple]:
        rows = self.select(
            f"SELECT ?p ?o WHERE {{ {resource.n3()} ?p ?o . FILTER(!isBlank(?o)) }} ORDER BY ?p ?o"
        )
        return [Triple(resource, row["p"], row["o"]) for row in rows if "p" in row and "o" in row]

    def instance_triples(self, cls: Iri) -> list[Triple]:
        rows = self.select(
            f"SELECT ?s ?p ?o WHERE {{ ?s a {cls.n3()} . ?s ?p ?o . "
            "FILTER(isIRI(?s) && !isBlank(?o)) } ORDER BY ?s ?p ?o"
        )
        return [Triple(row["s"], row["p"], row["o"]) for row in rows if {"s", "p", "o"} <= row.keys()]

    def ranking_graph(self, cls: Iri) -> Graph:
        # the whole remote KB cannot be shipped; rank over the class neighbourhood
        return Graph.of(self.instance_triples(cls))

    # ------------------------------------------------------------------
    # Protocol helpers
    # ------------------------------------------------------------------
    def select(self, query: str, paged: bool = True) -> list[dict[str, Term]]:
        key = (self.url, query)
        with self._lock:
            cached = self._cache.get(key)
        if cached is not None:
            return cached
        rows = list(self._pages(query)) if paged else list(parse_results(self._send(query)))
        with self._lock:
            self._cache.setdefault(key, rows)
        return rows

    def _pages(self, query: str) -> Iterator[dict[str, Term]]:
        offset = 0
        while True:
            page = list(parse_results(self._send(f"{query} LIMIT {self.page_size} OFFSET {offset}")))
            yield from page
            if len(page) < self.page_size:
                return
            offset += self.page_size

    def _send(self, query: str) -> dict[str, Any]:
        last_error: Exception | None = None
        for attempt in range(self.retries + 1):
            if attempt:
                delay = self.backoff * 2 ** (attempt - 1)
                logger.warning("Retrying SPARQL request to %s in %.2fs (attempt %d)", self.url, delay, attempt + 1)
                time.sleep(delay)
            try:
                self.requests_sent += 1
                response = self._session.get(self.url, params={"query": query}, timeout=self.timeout)
                if 400 <= response.status_code < 500:
                    raise KnowledgeBaseError(
                        f"SPARQL endpoint {self.url} rejected the query (HTTP {response.status_code})"
                    )
                response.raise_for_status()
                return response.json()
            except (requests.RequestException, ValueError) as exc:
                last_error = exc
                logger.debug("SPARQL request failed: %s", exc)
        raise EndpointUnreachableError(
            f"SPARQL endpoint {self.url} unreachable after {self.retries + 1} attempts: {last_error}"
        )


def parse_results(response: dict[str, Any]) -> Iterator[dict[str, Term]]:
    """Yield one ``{variable: term}`` dict per binding; blank nodes are dropped."""
    variables = response["head"]["vars"]
    for binding in response["results"]["bindings"]:
        row: dict[str, Term] = {}
        for var in variables:
            term = parse_value(binding.get(var))
            if term is not None:
                row[var] = term
        yield row


def parse_value(obj: dict[str, str] | None) -> Term | None:
    if not obj or not obj.get("type"):
        return None
    if obj["type"] == "uri":
        return Iri(obj["value"])
    if obj["type"] in ("literal", "typed-literal"):
        language = obj.get("xml:lang")
        if language:
            return Literal(obj["value"], language=language)
        datatype = obj.get("datatype")
        return Literal(obj["value"], Iri(datatype) if datatype else None)
    return None
