"""Baseline realiser: content words only.

Every clause names its subject in full, verbs stay in the present, and the
function words (articles, prepositions and their contractions, pronouns, the
conjunction "e", connectives) are removed.
"""
from __future__ import annotations

import logging
from typing import Sequence

from verbalizer.lexicon.features import Tense, VerbTense
from verbalizer.microplanning.types import ClausePlan, Shape
from verbalizer.realisation.base import Realiser
from verbalizer.realisation.composition import compose_summary

logger = logging.getLogger(__name__)

FUNCTION_WORDS = frozenset(
    """
    o a os as um uma uns umas
    de do da dos das em no na nos nas por pelo pela pelos pelas ao à aos às num numa
    ele ela eles elas seu sua seus suas dele dela deles delas
    e
    """.split()
)


def strip_function_words(text: str, connectives: Sequence[str] = ()) -> str:
    drop = FUNCTION_WORDS | {word.lower() for connective in connectives for word in connective.split()}
    return " ".join(w for w in text.split() if w.lower() not in drop)


class BaselineRealiser(Realiser):
    name = "baseline"

    def realise_clause(self, clause: ClausePlan, first_in_sentence: bool = False) -> str:
        number = clause.subject_lex.number
        subject = clause.subject_lex.phrase
        objects = " ".join(lex.phrase for lex in clause.object_lexes)
        copula = self.be(Tense.PRESENT, number)
        predicate = clause.predicate_lex
        if clause.shape is Shape.COPULA_TYPE:
            parts = [subject, copula, objects]
        elif clause.shape is Shape.POSSESSIVE:
            parts = [subject, predicate.phrase, copula, objects]
        elif predicate.source == "template":
            parts = [subject, predicate.label or predicate.phrase, objects]
        elif predicate.passive:
            parts = [subject, copula, self.lexicon.participle(predicate.verb_lemma, clause.subject_lex.gender, number), objects]
        else:
            parts = [subject, self.lexicon.conjugate(predicate.verb_lemma, VerbTense.PRESENT, number), objects]
        return strip_function_words(" ".join(parts), self.connectives)

    def compose(self, realised: Sequence[str]) -> str:
        return compose_summary(realised, self.max_per_sentence, self.balance_remainder, connectives=(), conjunction=None)
