from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

from verbalizer.errors import KnowledgeBaseError, NoTypeFoundError
from verbalizer.kb.base import Backend
from verbalizer.kb.local import LocalStore
from verbalizer.kb.sparql import SparqlEndpoint
from verbalizer.rdf.terms import Graph, Iri, Triple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResourceDescription:
    """Every statement whose subject is ``subject``, deduplicated, canonical order."""

    subject: Iri
    triples: tuple[Triple, ...] = ()

    def __post_init__(self) -> None:
        for triple in self.triples:
            if triple.subject != self.subject:
                raise KnowledgeBaseError(f"Triple {triple.n3()} does not describe <{self.subject}>")

    @classmethod
    def of(cls, subject: Iri, triples: Iterable[Triple]) -> "ResourceDescription":
        return cls(subject, tuple(sorted(set(triples), key=lambda t: t.sort_key)))

    @property
    def predicates(self) -> set[Iri]:
        return {t.predicate for t in self.triples}

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)

    def __len__(self) -> int:
        return len(self.triples)


class KnowledgeBase:
    """Uniform query surface over one :class:`Backend`."""

    def __init__(self, backend: Backend, label_language: str = "pt", class_namespace: str | None = None) -> None:
        if not label_language:
            raise KnowledgeBaseError("label_language must not be empty")
        self.backend = backend
        self.label_language = label_language
        self.class_namespace = class_namespace

    @classmethod
    def from_graph(cls, graph: Graph, **kwargs) -> "KnowledgeBase":
        return cls(LocalStore(graph), **kwargs)

    @classmethod
    def from_endpoint(
        cls,
        url: str,
        timeout: float = 30.0,
        retries: int = 3,
        page_size: int = 10000,
        **kwargs,
    ) -> "KnowledgeBase":
        return cls(SparqlEndpoint(url, timeout=timeout, retries=retries, page_size=page_size), **kwargs)

    # ------------------------------------------------------------------
    # Lifecycle
    # ------------------------------------------------------------------
    def __enter__(self) -> "KnowledgeBase":
        self.backend.__enter__()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.close()

    def close(self) -> None:
        self.backend.close()

    # ------------------------------------------------------------------
    # Queries used by the planners
    # ------------------------------------------------------------------
    def most_specific_class(self, resource: Iri) -> Iri:
        types = sorted(set(self.backend.types_of(resource)))
        if not types:
            raise NoTypeFoundError(resource.value)
        if self.class_namespace:
            in_namespace = [t for t in types if t.value.startswith(self.class_namespace)]
            types = in_namespace or types
        ancestors = {t: self.backend.superclasses(t) for t in types}
        # a type that is an ancestor of another candidate is never the most specific
        candidates = [t for t in types if not any(t in ancestors[o] for o in types if o != t)] or types
        best = min(candidates, key=lambda t: (self.backend.count_instances(t), t.value))
        logger.debug("Most specific class of %s is %s (candidates: %d)", resource, best, len(candidates))
        return best

    def instances_of(self, cls: Iri) -> list[Iri]:
        return sorted(set(self.backend.instances(cls)))

    def label_of(self, resource: Iri) -> str | None:
        """Shortest label in the configured language, whitespace collapsed; blank labels do not count."""
        labels = [" ".join(lit.lexical_form.split()) for lit in self.backend.labels(resource, self.label_language)]
        labels = [label for label in labels if label]
        if not labels:
            return None
        return min(labels, key=lambda label: (len(label), label))

    def describe(self, resource: Iri) -> ResourceDescription:
        return ResourceDescription.of(resource, (t for t in self.backend.describe(resource) if t.subject == resource))

    def types_of(self, resource: Iri) -> set[Iri]:
        return set(self.backend.types_of(resource))

    def class_chain(self, resource: Iri) -> set[Iri]:
        """The types of *resource* together with all their superclasses."""
        chain: set[Iri] = set()
        for cls in self.backend.types_of(resource):
            chain.add(cls)
            chain |= self.backend.superclasses(cls)
        return chain

    def instance_triples(self, cls: Iri) -> list[Triple]:
        return sorted(set(self.backend.instance_triples(cls)), key=lambda t: t.sort_key)

    def ranking_graph(self, cls: Iri) -> Graph:
        return self.backend.ranking_graph(cls)
