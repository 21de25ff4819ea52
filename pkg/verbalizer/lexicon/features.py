from __future__ import annotations

from enum import Enum


class Gender(str, Enum):
    MASCULINE = "masculine"
    FEMININE = "feminine"
    UNKNOWN = "unknown"

    @classmethod
    def from_code(cls, code: str) -> "Gender":
        return {"m": cls.MASCULINE, "f": cls.FEMININE}.get(code, cls.UNKNOWN)

    def agreeing(self) -> "Gender":
        """The gender used for agreement: unknown falls back to masculine."""
        return Gender.FEMININE if self is Gender.FEMININE else Gender.MASCULINE


class Number(str, Enum):
    SINGULAR = "singular"
    PLURAL = "plural"

    @classmethod
    def from_code(cls, code: str) -> "Number":
        return cls.PLURAL if code == "pl" else cls.SINGULAR

    @classmethod
    def of_count(cls, count: int) -> "Number":
        return cls.PLURAL if count > 1 else cls.SINGULAR


class Tense(str, Enum):
    """Document-level tense of a clause."""

    PRESENT = "present"
    PAST = "past"


class VerbTense(str, Enum):
    """Inflectional tense of a finite verb form."""

    PRESENT = "present"
    PRETERITE = "preterite"
    IMPERFECT = "imperfect"


POS_TENSES = {"V.PRES": VerbTense.PRESENT, "V.PRET": VerbTense.PRETERITE, "V.IMPF": VerbTense.IMPERFECT}
PARTS_OF_SPEECH = frozenset({"N", "ADJ", "NPROP", "PCP", *POS_TENSES})
