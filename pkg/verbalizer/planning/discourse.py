"""Discourse planning: cluster the selected triples by subject and order them."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from verbalizer.planning.content import PredicateRanking
from verbalizer.rdf.terms import RDF_TYPE, Iri, Term, Triple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fact:
    """One logical statement: coordinated subjects, a predicate, coordinated objects.

    Before aggregation every fact carries exactly one subject and one object.
    """

    subjects: tuple[Iri, ...]
    predicate: Iri
    objects: tuple[Term, ...]

    @classmethod
    def of(cls, triple: Triple) -> "Fact":
        return cls((triple.subject,), triple.predicate, (triple.object,))

    @property
    def subject(self) -> Iri:
        return self.subjects[0]

    @property
    def is_type(self) -> bool:
        return self.predicate == RDF_TYPE

    def triples(self) -> list[Triple]:
        return [Triple(s, self.predicate, o) for s in self.subjects for o in self.objects]


@dataclass(frozen=True)
class SubjectCluster:
    subject: Iri
    facts: tuple[Fact, ...]

    @property
    def triples(self) -> list[Triple]:
        return [t for fact in self.facts for t in fact.triples()]


@dataclass(frozen=True)
class DocumentPlan:
    clusters: tuple[SubjectCluster, ...] = ()

    @property
    def facts(self) -> list[Fact]:
        return [fact for cluster in self.clusters for fact in cluster.facts]

    @property
    def triples(self) -> list[Triple]:
        return [t for cluster in self.clusters for t in cluster.triples]

    @property
    def subjects(self) -> list[Iri]:
        return [cluster.subject for cluster in self.clusters]

    def __iter__(self) -> Iterator[SubjectCluster]:
        return iter(self.clusters)

    def __len__(self) -> int:
        return len(self.clusters)


def plan_discourse(triples: Iterable[Triple], ranking: PredicateRanking) -> DocumentPlan:
    """Order subjects by how many triples mention them, then order each cluster.

    Subjects with equal counts keep their first-appearance order. Inside a
    cluster ``rdf:type`` comes first, then ranking position, then input order.
    """
    triples = list(triples)
    counts = Counter(t.subject for t in triples)
    first_seen: dict[Iri, int] = {}
    for i, triple in enumerate(triples):
        first_seen.setdefault(triple.subject, i)

    subjects = sorted(counts, key=lambda s: (-counts[s], first_seen[s]))
    clusters = []
    for subject in subjects:
        members = [(i, t) for i, t in enumerate(triples) if t.subject == subject]
        members.sort(key=lambda item: (item[1].predicate != RDF_TYPE, ranking.position(item[1].predicate), item[0]))
        clusters.append(SubjectCluster(subject, tuple(Fact.of(t) for _, t in members)))

    logger.debug("Planned %d triples into %d clusters", len(triples), len(clusters))
    return DocumentPlan(tuple(clusters))
