from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any

from verbalizer.lexicon.features import Gender, Number, Tense


class Category(str, Enum):
    NOUN_PHRASE = "noun_phrase"
    VERB_PHRASE = "verb_phrase"
    LITERAL_PHRASE = "literal_phrase"


class ReferenceKind(str, Enum):
    FULL_NAME = "full_name"
    PERSONAL_PRONOUN = "personal_pronoun"
    POSSESSIVE_SHORT = "possessive_short"
    POSSESSIVE_LONG = "possessive_long"


class Shape(str, Enum):
    POSSESSIVE = "possessive_clause"
    VERBAL = "verbal_clause"
    COPULA_TYPE = "copula_type_clause"


# (kind, gender, number) -> surface; unknown gender agrees as masculine
PRONOUNS: dict[tuple[ReferenceKind, Gender, Number], str] = {
    (ReferenceKind.PERSONAL_PRONOUN, Gender.MASCULINE, Number.SINGULAR): "ele",
    (ReferenceKind.PERSONAL_PRONOUN, Gender.FEMININE, Number.SINGULAR): "ela",
    (ReferenceKind.PERSONAL_PRONOUN, Gender.MASCULINE, Number.PLURAL): "eles",
    (ReferenceKind.PERSONAL_PRONOUN, Gender.FEMININE, Number.PLURAL): "elas",
    (ReferenceKind.POSSESSIVE_SHORT, Gender.MASCULINE, Number.SINGULAR): "seu",
    (ReferenceKind.POSSESSIVE_SHORT, Gender.FEMININE, Number.SINGULAR): "sua",
    (ReferenceKind.POSSESSIVE_SHORT, Gender.MASCULINE, Number.PLURAL): "seus",
    (ReferenceKind.POSSESSIVE_SHORT, Gender.FEMININE, Number.PLURAL): "suas",
    (ReferenceKind.POSSESSIVE_LONG, Gender.MASCULINE, Number.SINGULAR): "dele",
    (ReferenceKind.POSSESSIVE_LONG, Gender.FEMININE, Number.SINGULAR): "dela",
    (ReferenceKind.POSSESSIVE_LONG, Gender.MASCULINE, Number.PLURAL): "deles",
    (ReferenceKind.POSSESSIVE_LONG, Gender.FEMININE, Number.PLURAL): "delas",
}


def _plain(data: dict[str, Any]) -> dict[str, Any]:
    return {key: value.value if isinstance(value, Enum) else value for key, value in data.items()}


def pronoun(kind: ReferenceKind, gender: Gender, number: Number) -> str:
    return PRONOUNS[(kind, gender.agreeing(), number)]


@dataclass(frozen=True)
class Lexicalization:
    """Portuguese rendering of one IRI or literal.

    ``article`` marks objects that take a definite article; ``label`` keeps
    the property label when a template supplied the verb.
    """

    phrase: str
    category: Category
    gender: Gender = Gender.UNKNOWN
    number: Number = Number.SINGULAR
    verb_lemma: str | None = None
    preposition: str | None = None
    passive: bool = False
    article: bool = False
    is_person: bool = False
    label: str | None = None
    source: str = "label"

    def __post_init__(self) -> None:
        if not self.phrase:
            raise ValueError("A lexicalization needs a non-empty phrase")
        if self.category is Category.VERB_PHRASE and not self.verb_lemma:
            raise ValueError(f"Verb phrase '{self.phrase}' has no verb lemma")

    def to_dict(self) -> dict[str, Any]:
        return _plain(asdict(self))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Lexicalization":
        return cls(
            **{
                **data,
                "category": Category(data["category"]),
                "gender": Gender(data["gender"]),
                "number": Number(data["number"]),
            }
        )


@dataclass(frozen=True)
class SubjectReference:
    kind: ReferenceKind
    surface: str
    gender: Gender
    number: Number = Number.SINGULAR

    def __post_init__(self) -> None:
        if self.kind is not ReferenceKind.FULL_NAME:
            allowed = {s for (k, _, _), s in PRONOUNS.items() if k is self.kind}
            if self.surface not in allowed:
                raise ValueError(f"'{self.surface}' is not a valid {self.kind.value} form")

    @classmethod
    def full_name(cls, lex: Lexicalization) -> "SubjectReference":
        return cls(ReferenceKind.FULL_NAME, lex.phrase, lex.gender, lex.number)

    @classmethod
    def pronominal(cls, kind: ReferenceKind, gender: Gender, number: Number) -> "SubjectReference":
        return cls(kind, pronoun(kind, gender, number), gender.agreeing(), number)

    def to_dict(self) -> dict[str, Any]:
        return _plain(asdict(self))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SubjectReference":
        return cls(
            ReferenceKind(data["kind"]),
            data["surface"],
            Gender(data["gender"]),
            Number(data.get("number", Number.SINGULAR.value)),
        )


@dataclass(frozen=True)
class ClausePlan:
    subject_ref: SubjectReference
    subject_lex: Lexicalization
    predicate_lex: Lexicalization
    object_lexes: tuple[Lexicalization, ...]
    shape: Shape
    tense: Tense
    subject_iris: tuple[str, ...] = ()
    predicate_iri: str = ""
    object_terms: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.object_lexes:
            raise ValueError("A clause needs at least one object")
        category = self.predicate_lex.category
        if self.shape is Shape.COPULA_TYPE:
            if category is not Category.VERB_PHRASE or self.predicate_lex.verb_lemma != "ser":
                raise ValueError("A copula clause is predicated by 'ser'")
        elif (self.shape is Shape.POSSESSIVE) != (category is Category.NOUN_PHRASE):
            raise ValueError(f"Shape {self.shape.value} does not fit a {category.value} predicate")

    @property
    def is_coordinated_subject(self) -> bool:
        return len(self.subject_iris) > 1

    @property
    def subject_key(self) -> tuple[str, ...]:
        return self.subject_iris or (self.subject_lex.phrase,)

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject_ref": self.subject_ref.to_dict(),
            "subject_lex": self.subject_lex.to_dict(),
            "predicate_lex": self.predicate_lex.to_dict(),
            "object_lexes": [lex.to_dict() for lex in self.object_lexes],
            "shape": self.shape.value,
            "tense": self.tense.value,
            "subject_iris": list(self.subject_iris),
            "predicate_iri": self.predicate_iri,
            "object_terms": list(self.object_terms),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ClausePlan":
        return cls(
            subject_ref=SubjectReference.from_dict(data["subject_ref"]),
            subject_lex=Lexicalization.from_dict(data["subject_lex"]),
            predicate_lex=Lexicalization.from_dict(data["predicate_lex"]),
            object_lexes=tuple(Lexicalization.from_dict(d) for d in data["object_lexes"]),
            shape=Shape(data["shape"]),
            tense=Tense(data["tense"]),
            subject_iris=tuple(data.get("subject_iris", ())),
            predicate_iri=data.get("predicate_iri", ""),
            object_terms=tuple(data.get("object_terms", ())),
        )
