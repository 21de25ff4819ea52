from __future__ import annotations

import logging
from collections import defaultdict

from verbalizer.kb.base import Backend, language_matches
from verbalizer.rdf.terms import RDF_TYPE, RDFS_LABEL, RDFS_SUBCLASSOF, Graph, Iri, Literal, Triple

logger = logging.getLogger(__name__)


class LocalStore(Backend):
    """In-memory backend over an immutable :class:`Graph`.

    Indexes are built once in the constructor; afterwards every read is
    lock-free.
    """

    name = "local"

    def __init__(self, graph: Graph) -> None:
        self.graph = graph
        by_subject: dict[Iri, list[Triple]] = defaultdict(list)
        members: dict[Iri, set[Iri]] = defaultdict(set)
        parents: dict[Iri, set[Iri]] = defaultdict(set)
        for triple in graph:
            by_subject[triple.subject].append(triple)
            if triple.predicate == RDF_TYPE and isinstance(triple.object, Iri):
                members[triple.object].add(triple.subject)
            elif triple.predicate == RDFS_SUBCLASSOF and isinstance(triple.object, Iri):
                parents[triple.subject].add(triple.object)
        self._by_subject = dict(by_subject)
        self._members = {cls: sorted(subjects) for cls, subjects in members.items()}
        self._parents = dict(parents)
        logger.debug(
            "LocalStore indexed %d triples, %d subjects, %d classes",
            len(graph),
            len(self._by_subject),
            len(self._members),
        )

    def types_of(self, resource: Iri) -> list[Iri]:
        return [
            t.object
            for t in self._by_subject.get(resource, ())
            if t.predicate == RDF_TYPE and isinstance(t.object, Iri)
        ]

    def superclasses(self, cls: Iri) -> set[Iri]:
        seen: set[Iri] = set()
        frontier = list(self._parents.get(cls, ()))
        while frontier:
            parent = frontier.pop()
            if parent in seen:
                continue
            seen.add(parent)
            frontier.extend(self._parents.get(parent, ()))
        seen.discard(cls)
        return seen

    def count_instances(self, cls: Iri) -> int:
        return len(self._members.get(cls, ()))

    def instances(self, cls: Iri) -> list[Iri]:
        return list(self._members.get(cls, ()))

    def labels(self, resource: Iri, language: str) -> list[Literal]:
        return [
            t.object
            for t in self._by_subject.get(resource, ())
            if t.predicate == RDFS_LABEL
            and isinstance(t.object, Literal)
            and language_matches(t.object.language, language)
        ]

    def describe(self, resource: Iri) -> list[Triple]:
        return list(self._by_subject.get(resource, ()))

    def instance_triples(self, cls: Iri) -> list[Triple]:
        return [t for member in self._members.get(cls, ()) for t in self._by_subject.get(member, ())]

    def ranking_graph(self, cls: Iri) -> Graph:
        return self.graph
