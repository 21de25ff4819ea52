"""Loading and validation of the linguistic data files.

File formats (tab separated, ``#`` starts a comment line, blank lines ignored):

* lexicon: ``form  lemma  pos  gender  number`` where pos is one of N, ADJ,
  NPROP, PCP, V.PRES, V.PRET, V.IMPF; gender ``m``/``f``/``-``; number ``sg``/``pl``
* name lists: one given name per line
* datatypes: ``datatype_iri  singular  plural  gender``
* templates: ``property_iri  verb_lemma  preposition  [voice]`` with ``-`` for
  "no preposition" and voice ``active`` (default) or ``passive``
"""
from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Mapping

from verbalizer.errors import ConjugationError, LexiconError, MalformedRowError, MissingVerbFormsError
from verbalizer.lexicon.features import PARTS_OF_SPEECH, POS_TENSES, Gender, Number, VerbTense
from verbalizer.lexicon.morphology import inflect_participle, regular_participle
from verbalizer.rdf.terms import Iri

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
MANDATORY_VERBS = ("ser", "falecer", "nascer")

# 3rd person endings per conjugation class: (tense, number) -> ending
_REGULAR_ENDINGS = {
    "ar": {
        (VerbTense.PRESENT, Number.SINGULAR): "a",
        (VerbTense.PRESENT, Number.PLURAL): "am",
        (VerbTense.PRETERITE, Number.SINGULAR): "ou",
        (VerbTense.PRETERITE, Number.PLURAL): "aram",
        (VerbTense.IMPERFECT, Number.SINGULAR): "ava",
        (VerbTense.IMPERFECT, Number.PLURAL): "avam",
    },
    "er": {
        (VerbTense.PRESENT, Number.SINGULAR): "e",
        (VerbTense.PRESENT, Number.PLURAL): "em",
        (VerbTense.PRETERITE, Number.SINGULAR): "eu",
        (VerbTense.PRETERITE, Number.PLURAL): "eram",
        (VerbTense.IMPERFECT, Number.SINGULAR): "ia",
        (VerbTense.IMPERFECT, Number.PLURAL): "iam",
    },
    "ir": {
        (VerbTense.PRESENT, Number.SINGULAR): "e",
        (VerbTense.PRESENT, Number.PLURAL): "em",
        (VerbTense.PRETERITE, Number.SINGULAR): "iu",
        (VerbTense.PRETERITE, Number.PLURAL): "iram",
        (VerbTense.IMPERFECT, Number.SINGULAR): "ia",
        (VerbTense.IMPERFECT, Number.PLURAL): "iam",
    },
}


@dataclass(frozen=True)
class LexicalEntry:
    form: str
    lemma: str
    pos: str
    gender: Gender
    number: Number

    @property
    def is_verb(self) -> bool:
        return self.pos in POS_TENSES or self.pos == "PCP"


@dataclass(frozen=True)
class DatatypeName:
    singular: str
    plural: str
    gender: Gender


@dataclass(frozen=True)
class PropertyTemplate:
    verb_lemma: str
    preposition: str | None = None
    voice: str = "active"

    @property
    def passive(self) -> bool:
        return self.voice == "passive"


@dataclass(frozen=True)
class Lexicon:
    entries: Mapping[str, tuple[LexicalEntry, ...]] = field(default_factory=dict)
    masculine_names: frozenset[str] = frozenset()
    feminine_names: frozenset[str] = frozenset()
    verb_table: Mapping[tuple[str, VerbTense, Number], str] = field(default_factory=dict)
    datatype_names: Mapping[Iri, DatatypeName] = field(default_factory=dict)
    version: str = ""

    def lookup(self, form: str, pos: str | None = None) -> list[LexicalEntry]:
        found = self.entries.get(form.lower(), ())
        return [e for e in found if pos is None or e.pos == pos]

    def noun_gender(self, word: str) -> Gender | None:
        for entry in self.lookup(word):
            if entry.pos in ("N", "NPROP", "ADJ") and entry.gender is not Gender.UNKNOWN:
                return entry.gender
        return None

    def conjugate(self, lemma: str, tense: VerbTense, number: Number) -> str:
        form = self.verb_table.get((lemma, tense, number))
        if form is not None:
            return form
        endings = _REGULAR_ENDINGS.get(lemma[-2:])
        if endings is None or len(lemma) < 3:
            raise ConjugationError(lemma)
        return lemma[:-2] + endings[(tense, number)]

    def participle(self, lemma: str, gender: Gender, number: Number) -> str:
        masculine = None
        for entries in self.entries.values():
            for entry in entries:
                if entry.pos != "PCP" or entry.lemma != lemma:
                    continue
                if entry.gender is gender.agreeing() and entry.number is number:
                    return entry.form
                if entry.gender is Gender.MASCULINE and entry.number is Number.SINGULAR:
                    masculine = entry.form
        if masculine is None:
            try:
                masculine = regular_participle(lemma)
            except ValueError:
                raise ConjugationError(lemma) from None
        return inflect_participle(masculine, gender, number)


def conjugate(lex: Lexicon, lemma: str, tense: VerbTense | str, number: Number | str) -> str:
    """3rd person form of *lemma*: table lookup first, regular paradigm otherwise."""
    return lex.conjugate(lemma, VerbTense(tense), Number(number))


# ----------------------------------------------------------------------
# Loading
# ----------------------------------------------------------------------
def _rows(path: Path, min_columns: int, max_columns: int | None = None) -> Iterator[tuple[int, list[str]]]:
    max_columns = max_columns or min_columns
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        columns = [c.strip() for c in line.split("\t")]
        if not min_columns <= len(columns) <= max_columns:
            expected = str(min_columns) if min_columns == max_columns else f"{min_columns}-{max_columns}"
            raise MalformedRowError(str(path), lineno, f"expected {expected} columns, found {len(columns)}")
        if any(not c for c in columns):
            raise MalformedRowError(str(path), lineno, "empty column")
        yield lineno, columns


def _read_names(path: Path) -> frozenset[str]:
    return frozenset(
        line.strip()
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    )


def load_lexicon(
    entries: str | Path,
    masculine_names: str | Path,
    feminine_names: str | Path,
    datatypes: str | Path | None = None,
) -> Lexicon:
    paths = [Path(p) for p in (entries, masculine_names, feminine_names, datatypes) if p is not None]
    for path in paths:
        if not path.exists():
            raise LexiconError(f"Lexicon file '{path}' not found")

    table: dict[str, list[LexicalEntry]] = {}
    seen: set[tuple[str, str]] = set()
    verbs: dict[tuple[str, VerbTense, Number], str] = {}
    for lineno, (form, lemma, pos, gender, number) in _rows(Path(entries), 5):
        if pos not in PARTS_OF_SPEECH:
            raise MalformedRowError(str(entries), lineno, f"unknown part of speech '{pos}'")
        if gender not in ("m", "f", "-"):
            raise MalformedRowError(str(entries), lineno, f"unknown gender '{gender}'")
        if number not in ("sg", "pl"):
            raise MalformedRowError(str(entries), lineno, f"unknown number '{number}'")
        if (form.lower(), pos) in seen:
            continue
        seen.add((form.lower(), pos))
        entry = LexicalEntry(form, lemma, pos, Gender.from_code(gender), Number.from_code(number))
        table.setdefault(form.lower(), []).append(entry)
        if pos in POS_TENSES:
            verbs.setdefault((lemma, POS_TENSES[pos], entry.number), form)

    for lemma in sorted({key[0] for key in verbs} | set(MANDATORY_VERBS)):
        missing = [
            tense.value
            for tense in (VerbTense.PRESENT, VerbTense.PRETERITE)
            if (lemma, tense, Number.SINGULAR) not in verbs
        ]
        if missing:
            raise MissingVerbFormsError(f"Verb '{lemma}' lacks 3rd person singular forms: {', '.join(missing)}")

    masculine = _read_names(Path(masculine_names))
    feminine = _read_names(Path(feminine_names))
    overlap = {n.lower() for n in masculine} & {n.lower() for n in feminine}
    if overlap:
        logger.warning("%d names appear in both name lists (e.g. %s)", len(overlap), sorted(overlap)[0])

    datatype_names: dict[Iri, DatatypeName] = {}
    if datatypes is not None:
        for _, (iri, singular, plural, gender) in _rows(Path(datatypes), 4):
            datatype_names.setdefault(Iri(iri), DatatypeName(singular, plural, Gender.from_code(gender)))

    digest = hashlib.sha256()
    for path in paths:
        digest.update(path.read_bytes())
        digest.update(b"\0")

    lexicon = Lexicon(
        entries={form: tuple(found) for form, found in table.items()},
        masculine_names=masculine,
        feminine_names=feminine,
        verb_table=verbs,
        datatype_names=datatype_names,
        version=digest.hexdigest()[:16],
    )
    logger.info(
        "Loaded lexicon %s: %d forms, %d verb forms, %d+%d names, %d datatypes",
        lexicon.version,
        len(lexicon.entries),
        len(verbs),
        len(masculine),
        len(feminine),
        len(datatype_names),
    )
    return lexicon


def load_templates(path: str | Path) -> dict[Iri, PropertyTemplate]:
    path = Path(path)
    if not path.exists():
        raise LexiconError(f"Template file '{path}' not found")
    templates: dict[Iri, PropertyTemplate] = {}
    for lineno, columns in _rows(path, 3, 4):
        iri, lemma, preposition = columns[:3]
        voice = columns[3] if len(columns) == 4 else "active"
        if voice not in ("active", "passive"):
            raise MalformedRowError(str(path), lineno, f"unknown voice '{voice}'")
        templates.setdefault(Iri(iri), PropertyTemplate(lemma, None if preposition == "-" else preposition, voice))
    logger.debug("Loaded %d property templates from %s", len(templates), path)
    return templates


@lru_cache(maxsize=1)
def default_lexicon() -> Lexicon:
    return load_lexicon(
        DATA_DIR / "lexicon.tsv",
        DATA_DIR / "names_masculine.txt",
        DATA_DIR / "names_feminine.txt",
        DATA_DIR / "datatypes.tsv",
    )
