from __future__ import annotations

import logging
from typing import Collection, Iterable, Sequence

from verbalizer.lexicon.features import Tense
from verbalizer.rdf.terms import DBO_NS, Iri, Triple
from verbalizer.realisation.grammar import SentenceSpec

logger = logging.getLogger(__name__)

DEFAULT_ENDING_PREDICATES = frozenset(
    {Iri(DBO_NS + "deathDate"), Iri(DBO_NS + "deathPlace"), Iri(DBO_NS + "dissolutionDate")}
)
DEFAULT_CONNECTIVES = ("Além disso",)


def choose_tense(description: Iterable[Triple], ending_predicates: Collection[Iri] = DEFAULT_ENDING_PREDICATES) -> Tense:
    """Past when the description states an end (death, dissolution), present otherwise."""
    if any(t.predicate in ending_predicates for t in description):
        return Tense.PAST
    return Tense.PRESENT


def sentence_spans(count: int, max_per_sentence: int = 3, balance_remainder: bool = False) -> list[tuple[int, int]]:
    """``[start, end)`` clause ranges of each sentence.

    With *balance_remainder* a last sentence shorter than half the maximum is
    folded into the one before it.
    """
    if max_per_sentence < 1:
        raise ValueError(f"max_per_sentence must be at least 1, got {max_per_sentence}")
    spans = [(start, min(start + max_per_sentence, count)) for start in range(0, count, max_per_sentence)]
    if balance_remainder and len(spans) > 1:
        start, end = spans[-1]
        if end - start < max_per_sentence / 2:
            spans[-2:] = [(spans[-2][0], end)]
    return spans


def compose_summary(
    clauses: Sequence[str],
    max_per_sentence: int = 3,
    balance_remainder: bool = False,
    connectives: Sequence[str] = DEFAULT_CONNECTIVES,
    conjunction: str | None = "e",
) -> str:
    """Group realized clauses into coordinated sentences.

    Sentences after the first open with a connective (cycling through
    *connectives*); ``conjunction=None`` joins clauses with commas only.
    """
    sentences = []
    for i, (start, end) in enumerate(sentence_spans(len(clauses), max_per_sentence, balance_remainder)):
        connective = connectives[(i - 1) % len(connectives)] if i and connectives else None
        sentences.append(SentenceSpec(tuple(clauses[start:end]), connective, conjunction).realise())
    logger.debug("Composed %d clauses into %d sentences", len(clauses), len(sentences))
    return " ".join(sentences)
