"""Brazilian-Portuguese suffix rules: gender guesses, plurals, participles, string similarity."""
from __future__ import annotations

from rapidfuzz.distance import Levenshtein

from verbalizer.lexicon.features import Gender, Number

#### GENDER ###########################################################################

# checked before the feminine endings: "sistema", "programa", "planeta"
gender_masculine_exceptions = ("ema", "ama", "eta", "dia")
gender_feminine = ("ção", "são", "dade", "tude", "gem", "ice", "ncia", "a")
gender_masculine = ("o", "or", "ema", "ês", "im", "um")


def guess_gender(word: str) -> Gender:
    """Gender of a noun from its ending; unknown when no rule applies."""
    w = word.lower()
    if w.endswith(gender_masculine_exceptions):
        return Gender.MASCULINE
    if w.endswith(gender_feminine):
        return Gender.FEMININE
    if w.endswith(gender_masculine):
        return Gender.MASCULINE
    return Gender.UNKNOWN


#### PLURALIZE ########################################################################

plural_inflections = [
    ("ão", "ões"), ("al", "ais"), ("el", "éis"), ("ol", "óis"), ("ul", "uis"), ("il", "is"),
    ("m", "ns"), ("r", "res"), ("z", "zes"),
]

# words left alone when pluralizing a phrase
phrase_linkers = frozenset({"de", "do", "da", "dos", "das", "em", "no", "na", "e"})


def pluralize(word: str) -> str:
    if not word or word.endswith(("s", "x")):
        return word
    for singular, plural in plural_inflections:
        if word.endswith(singular):
            return word[: -len(singular)] + plural
    return word + "s"


def pluralize_phrase(phrase: str) -> str:
    """Pluralize the head and its adjectives; a "de"-complement stays as it is.

    ``"quilômetro quadrado"`` -> ``"quilômetros quadrados"``,
    ``"ano de vida"`` -> ``"anos de vida"``.
    """
    words = phrase.split()
    out = []
    for i, word in enumerate(words):
        if word.lower() in phrase_linkers:
            out.extend(words[i:])
            break
        out.append(pluralize(word))
    return " ".join(out)


#### PARTICIPLES ######################################################################

participle_endings = {"ado": "ar", "ada": "ar", "ados": "ar", "adas": "ar", "ido": "er", "ida": "er", "idos": "er", "idas": "er"}


def participle_lemma(form: str) -> str | None:
    """Guess the infinitive behind a regular participle (``"chamado"`` -> ``"chamar"``)."""
    w = form.lower()
    for ending in sorted(participle_endings, key=len, reverse=True):
        if w.endswith(ending) and len(w) > len(ending) + 1:
            return w[: -len(ending)] + participle_endings[ending]
    return None


def regular_participle(lemma: str) -> str:
    if lemma.endswith("ar"):
        return lemma[:-2] + "ado"
    if lemma.endswith(("er", "ir")):
        return lemma[:-2] + "ido"
    raise ValueError(f"'{lemma}' is not a regular infinitive")


def inflect_participle(masculine_singular: str, gender: Gender, number: Number) -> str:
    """``conhecido`` -> ``conhecida``/``conhecidos``/``conhecidas``."""
    form = masculine_singular
    if gender.agreeing() is Gender.FEMININE and form.endswith("o"):
        form = form[:-1] + "a"
    if number is Number.PLURAL:
        form += "s"
    return form


#### SIMILARITY #######################################################################


def similarity(a: str, b: str) -> float:
    """1.0 for identical strings (case-insensitive), 0.0 for nothing in common."""
    return Levenshtein.normalized_similarity(a.lower(), b.lower())


def best_similarity(value: str, candidates: frozenset[str] | set[str]) -> float:
    if value.lower() in {c.lower() for c in candidates}:
        return 1.0
    return max((similarity(value, c) for c in candidates), default=0.0)
