from __future__ import annotations

import sys
from pathlib import Path

# Ensure project root (one level up from /tests) is on sys.path for import resolution
ROOT_DIR = Path(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

import pytest

from verbalizer.config import ENDPOINT_ENV
from verbalizer.kb.knowledge_base import KnowledgeBase
from verbalizer.lexicon.features import Gender, Number, Tense
from verbalizer.lexicon.resources import default_lexicon, load_templates
from verbalizer.microplanning.types import Category, ClausePlan, Lexicalization, Shape, SubjectReference
from verbalizer.rdf.terms import DBO_NS, DBR_NS, RDF_NS, Iri
from verbalizer.rdf.turtle import parse_turtle_subset

FIXTURES = Path(__file__).resolve().parent / "fixtures"

# ":" is the default namespace of the small samples the planning tests share
SAMPLE_PREFIXES = {"": DBR_NS, "dbo": DBO_NS, "rdf": RDF_NS}

EINSTEIN_TURTLE = """\
:Albert_Einstein  dbo:deathPlace :Princeton.
:Princeton        dbo:Country    :USA.
:Albert_Einstein  rdf:type       :Scientist.
:Albert_Einstein  dbo:knownFor   :General_relativity.
:Albert_Einstein  dbo:knownFor   :Brownian_motion.
:Albert_Einstein  dbo:birthPlace :Ulm.
:Ulm              rdf:type       :City.
:Ulm              dbo:Country    :Germany.
"""


def dbo(name: str) -> Iri:
    return Iri(DBO_NS + name)


def dbr(name: str) -> Iri:
    return Iri(DBR_NS + name)


@pytest.fixture(autouse=True)
def no_endpoint_env(monkeypatch):
    monkeypatch.delenv(ENDPOINT_ENV, raising=False)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def scientists_graph():
    return parse_turtle_subset((FIXTURES / "scientists.ttl").read_text(encoding="utf-8"))


@pytest.fixture()
def scientists_kb(scientists_graph):
    return KnowledgeBase.from_graph(scientists_graph, class_namespace=DBO_NS)


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def templates():
    return load_templates(Path(ROOT_DIR) / "verbalizer" / "data" / "templates.tsv")


# ----------------------------------------------------------------------
# Clause builders for the microplanning and realisation tests
# ----------------------------------------------------------------------
COPULA = Lexicalization("ser", Category.VERB_PHRASE, verb_lemma="ser", source="copula")


def noun(phrase: str, gender: Gender = Gender.UNKNOWN, *, article: bool = False, person: bool = False,
         number: Number = Number.SINGULAR) -> Lexicalization:
    return Lexicalization(phrase, Category.NOUN_PHRASE, gender, number, article=article, is_person=person)


def verb(lemma: str, preposition: str | None = None, *, passive: bool = False, label: str | None = None,
         source: str = "label") -> Lexicalization:
    phrase = f"{lemma} {preposition}" if preposition else lemma
    return Lexicalization(phrase, Category.VERB_PHRASE, verb_lemma=lemma, preposition=preposition, passive=passive,
                          label=label, source=source)


def clause(subject: Lexicalization, predicate: Lexicalization, objects: list[Lexicalization], shape: Shape,
           tense: Tense = Tense.PRESENT, subject_iris: tuple[str, ...] | None = None) -> ClausePlan:
    return ClausePlan(
        subject_ref=SubjectReference.full_name(subject),
        subject_lex=subject,
        predicate_lex=predicate,
        object_lexes=tuple(objects),
        shape=shape,
        tense=tense,
        subject_iris=subject_iris or (subject.phrase,),
    )
