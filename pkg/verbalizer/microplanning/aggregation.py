"""Sentence aggregation: object grouping, subject grouping, repetition removal."""
from __future__ import annotations

import logging
from typing import Callable, Hashable

from verbalizer.planning.discourse import DocumentPlan, Fact, SubjectCluster

logger = logging.getLogger(__name__)


def _unique(items):
    return tuple(dict.fromkeys(items))


def group_objects(cluster: SubjectCluster) -> SubjectCluster:
    """Facts sharing (subjects, predicate) collapse into one with coordinated objects."""
    merged: dict[tuple, Fact] = {}
    for fact in cluster.facts:
        key = (fact.subjects, fact.predicate)
        if key in merged:
            previous = merged[key]
            merged[key] = Fact(previous.subjects, previous.predicate, _unique(previous.objects + fact.objects))
        else:
            merged[key] = fact
    return SubjectCluster(cluster.subject, tuple(merged.values()))


def group_subjects(plan: DocumentPlan) -> DocumentPlan:
    """Facts sharing (predicate, objects) across clusters collapse into one with coordinated subjects.

    The merged fact stays where its first subject's fact was; clusters left
    without facts are dropped.
    """
    lead: dict[tuple, tuple[int, int]] = {}
    facts = [list(cluster.facts) for cluster in plan.clusters]
    removed: set[tuple[int, int]] = set()
    for ci, cluster in enumerate(plan.clusters):
        for fi, fact in enumerate(cluster.facts):
            key = (fact.predicate, fact.objects)
            if key not in lead:
                lead[key] = (ci, fi)
                continue
            li, lf = lead[key]
            target = facts[li][lf]
            facts[li][lf] = Fact(_unique(target.subjects + fact.subjects), target.predicate, target.objects)
            removed.add((ci, fi))

    clusters = []
    for ci, cluster in enumerate(plan.clusters):
        kept = tuple(fact for fi, fact in enumerate(facts[ci]) if (ci, fi) not in removed)
        if kept:
            clusters.append(SubjectCluster(cluster.subject, kept))
    return DocumentPlan(tuple(clusters))


def remove_repetitions(plan: DocumentPlan, key: Callable[[Fact], Hashable] | None = None) -> DocumentPlan:
    """Drop later facts whose key (by default the fact itself) was already seen."""
    seen: set = set()
    clusters = []
    for cluster in plan.clusters:
        kept = []
        for fact in cluster.facts:
            signature = key(fact) if key is not None else fact
            if signature in seen:
                logger.debug("Dropping repeated fact %s", fact)
                continue
            seen.add(signature)
            kept.append(fact)
        if kept:
            clusters.append(SubjectCluster(cluster.subject, tuple(kept)))
    return DocumentPlan(tuple(clusters))


def aggregate(plan: DocumentPlan, key: Callable[[Fact], Hashable] | None = None) -> DocumentPlan:
    """Object grouping within clusters, then subject grouping across them, then repetition removal.

    *key* maps a fact to its verbalization so that distinct facts reading the
    same are removed too.
    """
    grouped = group_subjects(DocumentPlan(tuple(group_objects(c) for c in plan.clusters)))
    result = remove_repetitions(grouped, key)
    logger.debug("Aggregated %d facts into %d", len(plan.facts), len(result.facts))
    return result
