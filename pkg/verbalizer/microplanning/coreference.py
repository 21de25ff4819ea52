"""Referring expressions: full names on first mention, pronouns afterwards."""
from __future__ import annotations

import logging
from dataclasses import replace
from typing import Iterable

from verbalizer.lexicon.features import Number
from verbalizer.microplanning.types import ClausePlan, ReferenceKind, Shape, SubjectReference

logger = logging.getLogger(__name__)


def possessive_reference(clause: ClausePlan, subject_count: int) -> SubjectReference:
    """``dele``/``dela`` (agreeing with the possessor) when several subjects compete, else ``seu``/``sua``."""
    if subject_count > 1:
        return SubjectReference.pronominal(
            ReferenceKind.POSSESSIVE_LONG, clause.subject_lex.gender, clause.subject_lex.number
        )
    return SubjectReference.pronominal(ReferenceKind.POSSESSIVE_SHORT, clause.predicate_lex.gender, Number.SINGULAR)


def apply_coreference(clauses: Iterable[ClausePlan], subject_count: int) -> list[ClausePlan]:
    mentioned: set[tuple[str, ...]] = set()
    result = []
    for clause in clauses:
        key = clause.subject_key
        if clause.is_coordinated_subject or key not in mentioned:
            mentioned.add(key)
            result.append(replace(clause, subject_ref=SubjectReference.full_name(clause.subject_lex)))
            continue
        if clause.shape is Shape.POSSESSIVE:
            ref = possessive_reference(clause, subject_count)
        else:
            ref = SubjectReference.pronominal(
                ReferenceKind.PERSONAL_PRONOUN, clause.subject_lex.gender, clause.subject_lex.number
            )
        result.append(replace(clause, subject_ref=ref))
    logger.debug("Coreference over %d clauses with %d subjects", len(result), subject_count)
    return result
