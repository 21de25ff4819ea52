from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from verbalizer.lexicon.features import Gender, Number

# (preposition, determiner) -> contracted form
CONTRACTIONS = {
    ("de", "o"): "do", ("de", "a"): "da", ("de", "os"): "dos", ("de", "as"): "das",
    ("em", "o"): "no", ("em", "a"): "na", ("em", "os"): "nos", ("em", "as"): "nas",
    ("por", "o"): "pelo", ("por", "a"): "pela", ("por", "os"): "pelos", ("por", "as"): "pelas",
    ("a", "o"): "ao", ("a", "a"): "à", ("a", "os"): "aos", ("a", "as"): "às",
    ("em", "um"): "num", ("em", "uma"): "numa",
}  # fmt: skip

DEFINITE = {
    (Gender.MASCULINE, Number.SINGULAR): "o",
    (Gender.FEMININE, Number.SINGULAR): "a",
    (Gender.MASCULINE, Number.PLURAL): "os",
    (Gender.FEMININE, Number.PLURAL): "as",
}
INDEFINITE = {
    (Gender.MASCULINE, Number.SINGULAR): "um",
    (Gender.FEMININE, Number.SINGULAR): "uma",
    (Gender.MASCULINE, Number.PLURAL): "uns",
    (Gender.FEMININE, Number.PLURAL): "umas",
}


class Determiner(str, Enum):
    DEFINITE = "definite"
    INDEFINITE = "indefinite"
    NONE = "none"


def contract(preposition: str, determiner: str | None) -> str:
    """``em`` + ``o`` -> ``no``; the preposition alone when there is no determiner."""
    if not determiner:
        return preposition
    return CONTRACTIONS.get((preposition, determiner), f"{preposition} {determiner}")


def definite_article(gender: Gender, number: Number = Number.SINGULAR) -> str:
    return DEFINITE[(gender.agreeing(), number)]


def indefinite_article(gender: Gender, number: Number = Number.SINGULAR) -> str:
    return INDEFINITE[(gender.agreeing(), number)]


def coordinate(items: Sequence[str], conjunction: str = "e") -> str:
    """``a``, ``a e b``, ``a, b e c``."""
    items = [item for item in items if item]
    if len(items) < 2:
        return "".join(items)
    return f"{', '.join(items[:-1])} {conjunction} {items[-1]}"


def capitalize_first(text: str) -> str:
    return text[:1].upper() + text[1:]


@dataclass(frozen=True)
class NounPhraseSpec:
    head: str
    gender: Gender = Gender.UNKNOWN
    number: Number = Number.SINGULAR
    determiner: Determiner = Determiner.NONE
    complement: str | None = None

    @property
    def article(self) -> str | None:
        if self.determiner is Determiner.DEFINITE:
            return definite_article(self.gender, self.number)
        if self.determiner is Determiner.INDEFINITE:
            return indefinite_article(self.gender, self.number)
        return None

    def realise(self, preposition: str | None = None) -> str:
        """The phrase, governed by *preposition* when given (contracted with the article)."""
        article = self.article
        words = []
        if preposition:
            words.append(contract(preposition, article))
        elif article:
            words.append(article)
        words.append(self.head)
        if self.complement:
            words.append(f"de {self.complement}")
        return " ".join(words)


@dataclass(frozen=True)
class SentenceSpec:
    clauses: tuple[str, ...]
    connective: str | None = None
    conjunction: str | None = "e"

    def __post_init__(self) -> None:
        if not self.clauses:
            raise ValueError("A sentence needs at least one clause")

    def realise(self) -> str:
        body = coordinate(self.clauses, self.conjunction) if self.conjunction else ", ".join(self.clauses)
        if self.connective:
            body = f"{self.connective}, {body}"
        return capitalize_first(body).rstrip(".") + "."
