"""Full realiser: possessive, verbal and copula clauses with agreement and contractions."""
from __future__ import annotations

import logging
from typing import Sequence

from verbalizer.lexicon.features import Gender, Number, Tense, VerbTense
from verbalizer.lexicon.morphology import pluralize_phrase
from verbalizer.lexicon.resources import default_lexicon
from verbalizer.microplanning.types import Category, ClausePlan, Lexicalization, ReferenceKind, Shape, pronoun
from verbalizer.realisation.base import Realiser
from verbalizer.realisation.composition import compose_summary
from verbalizer.realisation.grammar import (
    Determiner,
    NounPhraseSpec,
    coordinate,
    definite_article,
    indefinite_article,
)

logger = logging.getLogger(__name__)


class ModelRealiser(Realiser):
    name = "model"

    def realise_clause(self, clause: ClausePlan, first_in_sentence: bool = False) -> str:
        if clause.shape is Shape.POSSESSIVE:
            return self.realize_possessive_clause(clause, first_in_sentence)
        if clause.shape is Shape.COPULA_TYPE:
            return self.realize_copula_type_clause(clause)
        return self.realize_verbal_clause(clause)

    def compose(self, realised: Sequence[str]) -> str:
        return compose_summary(realised, self.max_per_sentence, self.balance_remainder, self.connectives)

    # ------------------------------------------------------------------
    # Clause shapes
    # ------------------------------------------------------------------
    def realize_possessive_clause(self, clause: ClausePlan, first_in_sentence: bool = False) -> str:
        ref = clause.subject_ref
        head = clause.predicate_lex
        gender = self._agreement(head.gender, head.phrase)
        copula = self.be(clause.tense, Number.of_count(len(clause.object_lexes)))
        objects = self._objects(clause.object_lexes)
        if ref.kind is ReferenceKind.FULL_NAME:
            return f"{definite_article(gender)} {head.phrase} de {ref.surface} {copula} {objects}"
        if ref.kind is ReferenceKind.POSSESSIVE_SHORT or first_in_sentence:
            # a clause opening a sentence takes the short form
            short = pronoun(ReferenceKind.POSSESSIVE_SHORT, gender, Number.SINGULAR)
            return f"{short} {head.phrase} {copula} {objects}"
        long_form = pronoun(ReferenceKind.POSSESSIVE_LONG, ref.gender, ref.number)
        return f"{definite_article(gender)} {head.phrase} {long_form} {copula} {objects}"

    def realize_verbal_clause(self, clause: ClausePlan) -> str:
        verb = clause.predicate_lex
        number = self._subject_number(clause)
        objects = self._objects(clause.object_lexes, verb.preposition)
        if verb.passive:
            gender = clause.subject_lex.gender
            participle = self.lexicon.participle(verb.verb_lemma, gender, number)
            head = f"{self.be(clause.tense, number)} {participle}"
        else:
            tense = VerbTense.PRETERITE if clause.tense is Tense.PAST else VerbTense.PRESENT
            head = self.lexicon.conjugate(verb.verb_lemma, tense, number)
        return f"{clause.subject_ref.surface} {head} {objects}"

    def realize_copula_type_clause(self, clause: ClausePlan) -> str:
        number = self._subject_number(clause)
        copula = self.be(clause.tense, number)
        if number is Number.PLURAL:
            classes = [pluralize_phrase(lex.phrase) for lex in clause.object_lexes]
        else:
            classes = [
                f"{indefinite_article(self._agreement(lex.gender, lex.phrase))} {lex.phrase}"
                for lex in clause.object_lexes
            ]
        return f"{clause.subject_ref.surface} {copula} {coordinate(classes)}"

    # ------------------------------------------------------------------
    # Internal helpers
    # ------------------------------------------------------------------
    def _subject_number(self, clause: ClausePlan) -> Number:
        if clause.subject_ref.kind is ReferenceKind.FULL_NAME:
            return clause.subject_lex.number
        return clause.subject_ref.number

    def _agreement(self, gender: Gender, phrase: str) -> Gender:
        if gender is Gender.UNKNOWN:
            message = f"Gender of '{phrase}' unresolved at realisation; masculine used"
            if message not in self.diagnostics:
                logger.warning("%s", message)
                self.diagnostics.append(message)
        return gender.agreeing()

    def _objects(self, lexes: Sequence[Lexicalization], preposition: str | None = None) -> str:
        phrases = []
        for lex in lexes:
            if lex.category is Category.NOUN_PHRASE and lex.article:
                spec = NounPhraseSpec(lex.phrase, self._agreement(lex.gender, lex.phrase), lex.number, Determiner.DEFINITE)
            else:
                spec = NounPhraseSpec(lex.phrase)
            phrases.append(spec.realise(preposition))
        return coordinate(phrases)


def _default() -> ModelRealiser:
    return ModelRealiser(default_lexicon())


def realize_possessive_clause(clause: ClausePlan, first_in_sentence: bool = False) -> str:
    return _default().realize_possessive_clause(clause, first_in_sentence)


def realize_verbal_clause(clause: ClausePlan) -> str:
    return _default().realize_verbal_clause(clause)


def realize_copula_type_clause(clause: ClausePlan) -> str:
    return _default().realize_copula_type_clause(clause)
