"""Content determination: rank the predicates of a class, keep the top k."""
from __future__ import annotations

import logging
import math
import re
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Collection, Mapping

import pandas as pd

from verbalizer.errors import ConfigError
from verbalizer.kb.knowledge_base import KnowledgeBase
from verbalizer.planning.pagerank import pagerank
from verbalizer.rdf.terms import OWL_SAMEAS, RDFS_COMMENT, RDFS_LABEL, Iri, Literal, Triple

logger = logging.getLogger(__name__)

DEFAULT_EXCLUDED = frozenset({RDFS_LABEL, RDFS_COMMENT, OWL_SAMEAS})


@dataclass(frozen=True)
class PredicateRanking:
    cls: Iri
    scores: tuple[tuple[Iri, float], ...] = ()

    def __post_init__(self) -> None:
        for predicate, score in self.scores:
            if not math.isfinite(score) or score < 0:
                raise ValueError(f"Invalid score {score} for <{predicate}>")
        keys = [_order_key(item) for item in self.scores]
        if keys != sorted(keys):
            raise ValueError("Ranking scores must be sorted descending with lexicographic ties")

    @classmethod
    def build(cls, class_iri: Iri, scores: Mapping[Iri, float]) -> "PredicateRanking":
        return cls(class_iri, tuple(sorted(scores.items(), key=_order_key)))

    @property
    def predicates(self) -> list[Iri]:
        return [predicate for predicate, _ in self.scores]

    def top(self, k: int, exclude: Collection[Iri] = ()) -> list[Iri]:
        if k < 1:
            raise ValueError(f"k must be at least 1, got {k}")
        return [p for p in self.predicates if p not in exclude][:k]

    def position(self, predicate: Iri) -> int:
        """Rank index of *predicate*; unranked predicates sort after every ranked one."""
        try:
            return self.predicates.index(predicate)
        except ValueError:
            return len(self.scores)

    # ------------------------------------------------------------------
    # TSV import / export
    # ------------------------------------------------------------------
    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {"predicate": [p.value for p, _ in self.scores], "score": [s for _, s in self.scores]},
            columns=["predicate", "score"],
        )

    def save(self, path: str | Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(path, sep="\t", index=False, header=False, float_format="%.17g")
        logger.debug("Saved ranking of %s (%d predicates) to %s", self.cls, len(self.scores), path)

    @classmethod
    def load(cls, path: str | Path, class_iri: Iri) -> "PredicateRanking":
        try:
            frame = pd.read_csv(
                path,
                sep="\t",
                header=None,
                names=["predicate", "score"],
                dtype={"predicate": str, "score": float},
            )
            return cls.build(
                class_iri, {Iri(row.predicate): float(row.score) for row in frame.itertuples(index=False)}
            )
        except (pd.errors.EmptyDataError, pd.errors.ParserError, ValueError, TypeError) as exc:
            raise ConfigError(f"Ranking cache '{path}' is empty or malformed: {exc}") from exc


def _order_key(item: tuple[Iri, float]) -> tuple[float, str]:
    predicate, score = item
    return -score, predicate.value


def cache_path(directory: str | Path, class_iri: Iri) -> Path:
    return Path(directory) / (re.sub(r"[^0-9A-Za-z]+", "_", class_iri.value).strip("_") + ".tsv")


def rank_predicates(kb: KnowledgeBase, class_iri: Iri, pr: Mapping[Iri, float]) -> PredicateRanking:
    """Score each predicate used by an instance of *class_iri* by the summed PageRank of its objects."""
    contributions: dict[Iri, list[float]] = defaultdict(list)
    for triple in kb.instance_triples(class_iri):
        obj = triple.object
        contributions[triple.predicate].append(pr.get(obj, 0.0) if isinstance(obj, Iri) else 0.0)
    ranking = PredicateRanking.build(class_iri, {p: math.fsum(v) for p, v in contributions.items()})
    logger.info("Ranked %d predicates for class %s", len(ranking.scores), class_iri)
    return ranking


def ranking_for(
    kb: KnowledgeBase,
    class_iri: Iri,
    cache_dir: str | Path | None = None,
    damping: float = 0.85,
    epsilon: float = 1e-8,
    max_iter: int = 100,
) -> PredicateRanking:
    """Load the cached ranking for *class_iri* or compute (and cache) it."""
    cached = cache_path(cache_dir, class_iri) if cache_dir else None
    if cached is not None and cached.exists():
        logger.info("Using cached ranking %s", cached)
        return PredicateRanking.load(cached, class_iri)
    scores = pagerank(kb.ranking_graph(class_iri), damping=damping, epsilon=epsilon, max_iter=max_iter)
    ranking = rank_predicates(kb, class_iri, scores)
    if cached is not None:
        ranking.save(cached)
    return ranking


def select_content(
    kb: KnowledgeBase,
    resource: Iri,
    ranking: PredicateRanking,
    k: int = 7,
    exclude: Collection[Iri] = DEFAULT_EXCLUDED,
    diagnostics: list[str] | None = None,
) -> list[Triple]:
    """Triples of *resource* whose predicate is among the top *k* ranked predicates.

    Literals with an empty or blank lexical form say nothing and are skipped.
    """
    chosen = set(ranking.top(k, exclude))
    selected = []
    for triple in kb.describe(resource):
        if triple.predicate not in chosen:
            continue
        if isinstance(triple.object, Literal) and not triple.object.lexical_form.strip():
            logger.info("Skipping empty literal of %s on %s", triple.predicate, resource)
            if diagnostics is not None:
                diagnostics.append(f"Empty literal for <{triple.predicate.value}> skipped")
            continue
        selected.append(triple)
    logger.debug("Selected %d triples over %d predicates for %s", len(selected), len(chosen), resource)
    return selected
