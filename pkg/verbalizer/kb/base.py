from __future__ import annotations

import abc

from verbalizer.rdf.terms import Graph, Iri, Literal, Triple


class Backend(abc.ABC):
    """Abstract base class for knowledge-base backends.

    Results may come back in any order; :class:`~verbalizer.kb.knowledge_base.KnowledgeBase`
    imposes the canonical order.
    """

    name: str = "AbstractBackend"

    # ------------------------------------------------------------------
    # Lifecycle hooks
    # ------------------------------------------------------------------
    def close(self) -> None:  # noqa: D401
        """Release network resources (no-op for in-memory stores)."""
        pass

    def __enter__(self) -> "Backend":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.close()

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    @abc.abstractmethod
    def types_of(self, resource: Iri) -> list[Iri]:
        raise NotImplementedError

    @abc.abstractmethod
    def superclasses(self, cls: Iri) -> set[Iri]:
        """Transitive ``rdfs:subClassOf`` ancestors of *cls*, excluding itself."""
        raise NotImplementedError

    @abc.abstractmethod
    def count_instances(self, cls: Iri) -> int:
        raise NotImplementedError

    @abc.abstractmethod
    def instances(self, cls: Iri) -> list[Iri]:
        raise NotImplementedError

    @abc.abstractmethod
    def labels(self, resource: Iri, language: str) -> list[Literal]:
        raise NotImplementedError

    @abc.abstractmethod
    def describe(self, resource: Iri) -> list[Triple]:
        raise NotImplementedError

    @abc.abstractmethod
    def instance_triples(self, cls: Iri) -> list[Triple]:
        """Every triple whose subject is an instance of *cls*."""
        raise NotImplementedError

    @abc.abstractmethod
    def ranking_graph(self, cls: Iri) -> Graph:
        """The graph PageRank runs over when ranking *cls* predicates."""
        raise NotImplementedError


def language_matches(tag: str | None, wanted: str) -> bool:
    """SPARQL ``langMatches`` semantics for a basic language range."""
    if tag is None:
        return False
    if wanted == "*":
        return True
    tag, wanted = tag.lower(), wanted.lower()
    return tag == wanted or tag.startswith(wanted + "-")
