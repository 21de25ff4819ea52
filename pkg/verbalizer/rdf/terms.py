"""RDF data model: IRIs, literals, triples and graphs.

All terms are immutable and hashable. A :class:`Graph` is a set of triples
whose iteration order is canonical (sorted by the N-Triples form of subject,
predicate and object), so every stage downstream of parsing is deterministic.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Union

from verbalizer.errors import TermError

_IRI_FORBIDDEN = re.compile(r'[\x00-\x20<>"{}|^`\\]')
_LANG_TAG = re.compile(r"^[a-zA-Z]+(-[a-zA-Z0-9]+)*$")

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
DBO_NS = "http://dbpedia.org/ontology/"
DBR_NS = "http://dbpedia.org/resource/"
DT_NS = "http://dbpedia.org/datatype/"


@dataclass(frozen=True, order=True)
class Iri:
    value: str

    def __post_init__(self) -> None:
        if not self.value:
            raise TermError("IRI must not be empty")
        if ":" not in self.value:
            raise TermError(f"IRI '{self.value}' is not absolute (no scheme)")
        if _IRI_FORBIDDEN.search(self.value):
            raise TermError(f"IRI '{self.value}' contains a forbidden character")

    def n3(self) -> str:
        return f"<{self.value}>"

    @property
    def local_name(self) -> str:
        """Fragment after ``#`` if any, else the segment after the last ``/``."""
        if "#" in self.value:
            fragment = self.value.rsplit("#", 1)[1]
            if fragment:
                return fragment
        return self.value.rstrip("/").rsplit("/", 1)[-1]

    def __str__(self) -> str:
        return self.value


RDF_TYPE = Iri(RDF_NS + "type")
RDF_LANGSTRING = Iri(RDF_NS + "langString")
RDFS_LABEL = Iri(RDFS_NS + "label")
RDFS_COMMENT = Iri(RDFS_NS + "comment")
RDFS_SUBCLASSOF = Iri(RDFS_NS + "subClassOf")
OWL_SAMEAS = Iri(OWL_NS + "sameAs")
XSD_STRING = Iri(XSD_NS + "string")
XSD_INTEGER = Iri(XSD_NS + "integer")
XSD_DECIMAL = Iri(XSD_NS + "decimal")
XSD_DOUBLE = Iri(XSD_NS + "double")
XSD_BOOLEAN = Iri(XSD_NS + "boolean")

STRING_DATATYPES = frozenset(
    {XSD_STRING, RDF_LANGSTRING, Iri(XSD_NS + "normalizedString"), Iri(XSD_NS + "token")}
)

_ECHAR_OUT = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r"}


@dataclass(frozen=True)
class Literal:
    lexical_form: str
    datatype: Iri = None  # type: ignore[assignment]
    language: str | None = None

    def __post_init__(self) -> None:
        if self.language is not None:
            if not self.language or not _LANG_TAG.match(self.language):
                raise TermError(f"Invalid language tag '{self.language}'")
            # tags compare case-insensitively; keep one spelling
            object.__setattr__(self, "language", self.language.lower())
            if self.datatype is None:
                object.__setattr__(self, "datatype", RDF_LANGSTRING)
            elif self.datatype != RDF_LANGSTRING:
                raise TermError("A language-tagged literal must have datatype rdf:langString")
        elif self.datatype is None:
            object.__setattr__(self, "datatype", XSD_STRING)
        elif self.datatype == RDF_LANGSTRING:
            raise TermError("rdf:langString literals require a language tag")
        if not self.lexical_form and self.datatype not in STRING_DATATYPES:
            raise TermError(f"Empty lexical form is not valid for <{self.datatype}>")

    def n3(self) -> str:
        escaped = "".join(_ECHAR_OUT.get(ch, ch) for ch in self.lexical_form)
        if self.language is not None:
            return f'"{escaped}"@{self.language}'
        if self.datatype == XSD_STRING:
            return f'"{escaped}"'
        return f'"{escaped}"^^{self.datatype.n3()}'

    def __str__(self) -> str:
        return self.lexical_form


Term = Union[Iri, Literal]


@dataclass(frozen=True)
class Triple:
    subject: Iri
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.subject, Iri):
            raise TermError(f"Triple subject must be an IRI, got {self.subject!r}")
        if not isinstance(self.predicate, Iri):
            raise TermError(f"Triple predicate must be an IRI, got {self.predicate!r}")
        if not isinstance(self.object, (Iri, Literal)):
            raise TermError(f"Triple object must be an IRI or literal, got {self.object!r}")

    @property
    def sort_key(self) -> tuple[str, str, str]:
        return self.subject.n3(), self.predicate.n3(), self.object.n3()

    def n3(self) -> str:
        return f"{self.subject.n3()} {self.predicate.n3()} {self.object.n3()} ."


@dataclass(frozen=True)
class Graph:
    """A set of triples with canonical iteration order."""

    triples: frozenset[Triple] = field(default_factory=frozenset)

    @classmethod
    def of(cls, triples: Iterable[Triple]) -> "Graph":
        return cls(frozenset(triples))

    def add(self, triple: Triple) -> "Graph":
        if triple in self.triples:
            return self
        return Graph(self.triples | {triple})

    def union(self, other: "Graph") -> "Graph":
        return Graph(self.triples | other.triples)

    @cached_property
    def ordered(self) -> tuple[Triple, ...]:
        return tuple(sorted(self.triples, key=lambda t: t.sort_key))

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.ordered)

    def __len__(self) -> int:
        return len(self.triples)

    def __contains__(self, triple: object) -> bool:
        return triple in self.triples

    def __bool__(self) -> bool:
        return bool(self.triples)
