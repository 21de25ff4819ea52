from __future__ import annotations

import abc

from verbalizer.lexicon.features import Gender, Number
from verbalizer.lexicon.morphology import guess_gender, participle_lemma
from verbalizer.lexicon.resources import LexicalEntry, Lexicon


class TagProvider(abc.ABC):
    """Part-of-speech tagger used to read property labels."""

    name: str = "AbstractTagger"

    @abc.abstractmethod
    def tag(self, word: str) -> list[LexicalEntry]:
        """Candidate analyses of *word*, most likely first; empty when unknown."""
        raise NotImplementedError


class LexiconTagger(TagProvider):
    """Dictionary lookup with suffix rules for words the lexicon does not list."""

    name = "lexicon"

    def __init__(self, lexicon: Lexicon) -> None:
        self.lexicon = lexicon

    def tag(self, word: str) -> list[LexicalEntry]:
        known = self.lexicon.lookup(word)
        if known:
            return known
        lemma = participle_lemma(word)
        if lemma is not None:
            w = word.lower()
            gender = Gender.FEMININE if w.rstrip("s").endswith("a") else Gender.MASCULINE
            number = Number.PLURAL if w.endswith("s") else Number.SINGULAR
            return [LexicalEntry(word, lemma, "PCP", gender, number)]
        gender = guess_gender(word)
        if gender is not Gender.UNKNOWN:
            return [LexicalEntry(word, word.lower(), "N", gender, Number.SINGULAR)]
        return []
