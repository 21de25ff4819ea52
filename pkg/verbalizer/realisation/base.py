from __future__ import annotations

import abc
import logging
from typing import Sequence

from verbalizer.lexicon.features import Number, Tense, VerbTense
from verbalizer.lexicon.resources import Lexicon
from verbalizer.microplanning.types import ClausePlan
from verbalizer.realisation.composition import DEFAULT_CONNECTIVES, sentence_spans

logger = logging.getLogger(__name__)


class Realiser(abc.ABC):
    """Abstract base class for surface realisers."""

    name: str = "AbstractRealiser"

    def __init__(
        self,
        lexicon: Lexicon,
        copula_past: str = "preterite",
        max_per_sentence: int = 3,
        balance_remainder: bool = False,
        connectives: Sequence[str] = DEFAULT_CONNECTIVES,
    ) -> None:
        if copula_past not in ("preterite", "imperfect"):
            raise ValueError(f"copula_past must be 'preterite' or 'imperfect', got {copula_past!r}")
        self.lexicon = lexicon
        self.copula_past = VerbTense(copula_past)
        self.max_per_sentence = max_per_sentence
        self.balance_remainder = balance_remainder
        self.connectives = tuple(connectives)
        self.diagnostics: list[str] = []

    # ------------------------------------------------------------------
    # Hooks
    # ------------------------------------------------------------------
    @abc.abstractmethod
    def realise_clause(self, clause: ClausePlan, first_in_sentence: bool = False) -> str:
        raise NotImplementedError

    @abc.abstractmethod
    def compose(self, realised: Sequence[str]) -> str:
        raise NotImplementedError

    # ------------------------------------------------------------------
    # Shared helpers
    # ------------------------------------------------------------------
    def be(self, tense: Tense, number: Number) -> str:
        return self.lexicon.conjugate("ser", self.copula_past if tense is Tense.PAST else VerbTense.PRESENT, number)

    def realise_document(self, clauses: Sequence[ClausePlan]) -> tuple[str, list[str]]:
        """Realise every clause, then compose them; returns the text and the realised clauses."""
        starts = {start for start, _ in sentence_spans(len(clauses), self.max_per_sentence, self.balance_remainder)}
        realised = [self.realise_clause(clause, i in starts) for i, clause in enumerate(clauses)]
        text = self.compose(realised)
        logger.debug("%s realiser produced %d characters from %d clauses", self.name, len(text), len(clauses))
        return text, realised

    def settings(self) -> dict:
        return {
            "realiser": self.name,
            "copula_past": self.copula_past.value,
            "max_per_sentence": self.max_per_sentence,
            "balance_remainder": self.balance_remainder,
            "connectives": list(self.connectives),
        }
