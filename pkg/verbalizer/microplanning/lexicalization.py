"""Lexicalization of resources, classes, properties and literals."""
from __future__ import annotations

import logging
import re
from decimal import Decimal, InvalidOperation
from typing import Collection, Mapping

from verbalizer.kb.knowledge_base import KnowledgeBase
from verbalizer.lexicon.features import Gender, Number
from verbalizer.lexicon.morphology import best_similarity, guess_gender, pluralize_phrase
from verbalizer.lexicon.resources import Lexicon, PropertyTemplate
from verbalizer.lexicon.tagging import LexiconTagger, TagProvider
from verbalizer.microplanning.types import Category, Lexicalization
from verbalizer.planning.discourse import Fact
from verbalizer.rdf.terms import DBO_NS, RDF_TYPE, STRING_DATATYPES, XSD_NS, Iri, Literal, Term

logger = logging.getLogger(__name__)

DEFAULT_PERSON_CLASSES = frozenset({Iri(DBO_NS + "Person")})
DEFAULT_DETERMINER_CLASSES = frozenset(
    {Iri(DBO_NS + "PopulatedPlace"), Iri(DBO_NS + "University"), Iri(DBO_NS + "Award")}
)

PREPOSITIONS = frozenset({"de", "em", "por", "a", "com", "para"})
_CAMEL = re.compile(r"(?<=[a-z0-9])(?=[A-Z])")


def _note(diagnostics: list[str] | None, message: str, *args) -> None:
    logger.warning(message, *args)
    if diagnostics is not None:
        diagnostics.append(message % args)


def name_from_iri(iri: Iri) -> str:
    """Fragment after ``#``, else the last path segment; underscores become spaces."""
    return iri.local_name.replace("_", " ").strip() or iri.value


def words_from_iri(iri: Iri) -> str:
    """``deathPlace`` -> ``death place``."""
    return _CAMEL.sub(" ", name_from_iri(iri)).lower()


def resolve_gender(
    phrase: str,
    is_person: bool,
    lex: Lexicon,
    threshold: float = 0.8,
    tagger: TagProvider | None = None,
) -> Gender:
    """Gender from the name lists (persons) or from the head noun (everything else)."""
    words = phrase.split()
    if not words:
        return Gender.UNKNOWN
    first = words[0]
    if is_person:
        masculine = best_similarity(first, lex.masculine_names)
        feminine = best_similarity(first, lex.feminine_names)
        if max(masculine, feminine) < threshold:
            return Gender.UNKNOWN
        return Gender.MASCULINE if masculine >= feminine else Gender.FEMININE
    known = lex.noun_gender(first)
    if known is not None:
        return known
    tagger = tagger or LexiconTagger(lex)
    for entry in tagger.tag(first):
        if entry.pos in ("N", "NPROP", "ADJ") and entry.gender is not Gender.UNKNOWN:
            return entry.gender
    return Gender.UNKNOWN


def lexicalize_resource(
    kb: KnowledgeBase,
    resource: Iri,
    lex: Lexicon,
    person_classes: Collection[Iri] = DEFAULT_PERSON_CLASSES,
    determiner_classes: Collection[Iri] = DEFAULT_DETERMINER_CLASSES,
    threshold: float = 0.8,
    diagnostics: list[str] | None = None,
) -> Lexicalization:
    label = kb.label_of(resource)
    source = "label"
    if label is None:
        label = name_from_iri(resource)
        source = "fragment"
        _note(diagnostics, "No '%s' label for <%s>; using '%s'", kb.label_language, resource, label)
    chain = kb.class_chain(resource)
    is_person = bool(chain & set(person_classes))
    gender = resolve_gender(label, is_person, lex, threshold)
    if gender is Gender.UNKNOWN:
        _note(diagnostics, "Gender of '%s' unknown; masculine agreement used", label)
    article = label[:1].islower() or bool(chain & set(determiner_classes))
    return Lexicalization(
        phrase=label,
        category=Category.NOUN_PHRASE,
        gender=gender,
        number=Number.SINGULAR,
        article=article,
        is_person=is_person,
        source=source,
    )


def lexicalize_class(kb: KnowledgeBase, cls: Iri, lex: Lexicon, diagnostics: list[str] | None = None) -> Lexicalization:
    label = kb.label_of(cls)
    source = "label"
    if label is None:
        label = words_from_iri(cls)
        source = "fragment"
        _note(diagnostics, "No '%s' label for class <%s>; using '%s'", kb.label_language, cls, label)
    gender = resolve_gender(label, False, lex)
    if gender is Gender.UNKNOWN:
        _note(diagnostics, "Gender of '%s' unknown; masculine agreement used", label)
    return Lexicalization(phrase=label, category=Category.NOUN_PHRASE, gender=gender, source=source)


def lexicalize_property(
    kb: KnowledgeBase,
    prop: Iri,
    lex: Lexicon,
    templates: Mapping[Iri, PropertyTemplate],
    tagger: TagProvider | None = None,
    diagnostics: list[str] | None = None,
) -> Lexicalization:
    label = kb.label_of(prop)
    template = templates.get(prop)
    if template is not None:
        phrase = template.verb_lemma if not template.preposition else f"{template.verb_lemma} {template.preposition}"
        return Lexicalization(
            phrase=phrase,
            category=Category.VERB_PHRASE,
            verb_lemma=template.verb_lemma,
            preposition=template.preposition,
            passive=template.passive,
            label=label or words_from_iri(prop),
            source="template",
        )
    if label is None:
        phrase = words_from_iri(prop)
        _note(diagnostics, "Property <%s> has no label or template; using '%s'", prop, phrase)
        return Lexicalization(phrase=phrase, category=Category.NOUN_PHRASE, label=phrase, source="fragment")

    words = label.split()
    tagger = tagger or LexiconTagger(lex)
    analyses = tagger.tag(words[0])
    verb = next((a for a in analyses if a.is_verb), None)
    if verb is not None:
        preposition = words[-1].lower() if len(words) > 1 and words[-1].lower() in PREPOSITIONS else None
        return Lexicalization(
            phrase=label,
            category=Category.VERB_PHRASE,
            verb_lemma=verb.lemma,
            preposition=preposition,
            passive=verb.pos == "PCP",
            label=label,
        )
    gender = next((a.gender for a in analyses if a.gender is not Gender.UNKNOWN), None)
    if gender is None:
        gender = guess_gender(words[0])
    if gender is Gender.UNKNOWN:
        _note(diagnostics, "Gender of property label '%s' unknown; masculine agreement used", label)
    return Lexicalization(phrase=label, category=Category.NOUN_PHRASE, gender=gender, label=label)


def _magnitude(lexical_form: str) -> Decimal | None:
    try:
        return abs(Decimal(lexical_form))
    except (InvalidOperation, ValueError):
        return None


def lexicalize_literal(literal: Literal, lex: Lexicon, diagnostics: list[str] | None = None) -> Lexicalization:
    value = literal.lexical_form
    if not value.strip():
        raise ValueError(f"Literal of type <{literal.datatype}> has an empty lexical form")
    datatype = literal.datatype
    if literal.language is not None or datatype in STRING_DATATYPES or datatype.value.startswith(XSD_NS):
        return Lexicalization(phrase=value, category=Category.LITERAL_PHRASE, source="literal")

    singular_value = _magnitude(literal.lexical_form) == 1
    known = lex.datatype_names.get(datatype)
    if known is not None:
        unit = known.singular if singular_value else known.plural
        gender = known.gender
    else:
        unit = words_from_iri(datatype)
        if not singular_value:
            unit = pluralize_phrase(unit)
        gender = Gender.UNKNOWN
        _note(diagnostics, "Datatype <%s> is not in the datatype table; using '%s'", datatype, unit)
    return Lexicalization(phrase=f"{value} {unit}", category=Category.LITERAL_PHRASE, gender=gender, source="literal")


class Lexicalizer:
    """Memoizing front end over the lexicalize_* functions for one document."""

    def __init__(
        self,
        kb: KnowledgeBase,
        lexicon: Lexicon,
        templates: Mapping[Iri, PropertyTemplate],
        person_classes: Collection[Iri] = DEFAULT_PERSON_CLASSES,
        determiner_classes: Collection[Iri] = DEFAULT_DETERMINER_CLASSES,
        similarity_threshold: float = 0.8,
        tagger: TagProvider | None = None,
    ) -> None:
        self.kb = kb
        self.lexicon = lexicon
        self.templates = templates
        self.person_classes = frozenset(person_classes)
        self.determiner_classes = frozenset(determiner_classes)
        self.similarity_threshold = similarity_threshold
        self.tagger = tagger or LexiconTagger(lexicon)
        self.diagnostics: list[str] = []
        self._cache: dict[tuple[str, Term], Lexicalization] = {}

    def resource(self, iri: Iri) -> Lexicalization:
        return self._memo(
            "resource",
            iri,
            lambda: lexicalize_resource(
                self.kb,
                iri,
                self.lexicon,
                self.person_classes,
                self.determiner_classes,
                self.similarity_threshold,
                self.diagnostics,
            ),
        )

    def cls(self, iri: Iri) -> Lexicalization:
        return self._memo("class", iri, lambda: lexicalize_class(self.kb, iri, self.lexicon, self.diagnostics))

    def prop(self, iri: Iri) -> Lexicalization:
        return self._memo(
            "property",
            iri,
            lambda: lexicalize_property(self.kb, iri, self.lexicon, self.templates, self.tagger, self.diagnostics),
        )

    def term(self, term: Term) -> Lexicalization:
        if isinstance(term, Literal):
            return self._memo("literal", term, lambda: lexicalize_literal(term, self.lexicon, self.diagnostics))
        return self.resource(term)

    def obj(self, fact: Fact, term: Term) -> Lexicalization:
        if fact.predicate == RDF_TYPE and isinstance(term, Iri):
            return self.cls(term)
        return self.term(term)

    def is_person(self, term: Term) -> bool:
        return isinstance(term, Iri) and bool(self.kb.class_chain(term) & self.person_classes)

    def signature(self, fact: Fact) -> tuple:
        """How a fact reads: used to drop facts that verbalize identically."""
        return (
            tuple(self.resource(s).phrase for s in fact.subjects),
            "ser" if fact.predicate == RDF_TYPE else self.prop(fact.predicate).phrase,
            tuple(self.obj(fact, o).phrase for o in fact.objects),
        )

    def _memo(self, kind: str, term: Term, build) -> Lexicalization:
        key = (kind, term)
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]
