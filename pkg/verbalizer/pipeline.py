"""End-to-end orchestration: content determination, discourse planning,
microplanning and realisation for one resource or a batch of them.

Each stage runs inside :func:`stage`, which stamps the stage name on any
:class:`~verbalizer.errors.VerbalizerError` escaping it. Batches run the
per-resource pipeline in worker threads, bounded by ``parallelism``.
"""
from __future__ import annotations

import asyncio
import logging
import threading
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Iterator, Mapping, Sequence

from verbalizer.config import PipelineConfig
from verbalizer.errors import ConfigError, EmptySelectionError, VerbalizerError
from verbalizer.kb.knowledge_base import KnowledgeBase
from verbalizer.lexicon.features import Gender, Number, Tense
from verbalizer.lexicon.resources import Lexicon, PropertyTemplate, default_lexicon, load_lexicon, load_templates
from verbalizer.microplanning.aggregation import aggregate
from verbalizer.microplanning.coreference import apply_coreference
from verbalizer.microplanning.lexicalization import Lexicalizer
from verbalizer.microplanning.types import Category, ClausePlan, Lexicalization, Shape, SubjectReference
from verbalizer.planning.content import PredicateRanking, ranking_for, select_content
from verbalizer.planning.discourse import DocumentPlan, Fact, SubjectCluster, plan_discourse
from verbalizer.rdf.ntriples import parse_ntriples
from verbalizer.rdf.terms import Iri
from verbalizer.rdf.turtle import parse_turtle_subset
from verbalizer.realisation.base import Realiser
from verbalizer.realisation.baseline import BaselineRealiser
from verbalizer.realisation.composition import choose_tense
from verbalizer.realisation.grammar import coordinate
from verbalizer.realisation.model import ModelRealiser

logger = logging.getLogger(__name__)

TRACE_SCHEMA_VERSION = "1"

REALISER_MAP: dict[str, type[Realiser]] = {
    ModelRealiser.name: ModelRealiser,
    BaselineRealiser.name: BaselineRealiser,
}

COPULA = Lexicalization(phrase="ser", category=Category.VERB_PHRASE, verb_lemma="ser", source="copula")


@contextmanager
def stage(name: str) -> Iterator[None]:
    try:
        yield
    except VerbalizerError as exc:
        if exc.stage is None:
            exc.stage = name
        raise


@dataclass
class VerbalizationResult:
    resource: Iri
    text: str = ""
    trace: dict[str, Any] = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)
    error: VerbalizerError | None = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"resource": self.resource.value, "text": self.text, "diagnostics": self.diagnostics}
        if self.trace:
            data["trace"] = self.trace
        if self.error is not None:
            data["error"] = {"type": type(self.error).__name__, "stage": self.error.stage, "message": self.error.message}
        return data


# ----------------------------------------------------------------------
# Trace helpers
# ----------------------------------------------------------------------
def _fact_dict(fact: Fact) -> dict[str, Any]:
    return {
        "subjects": [s.value for s in fact.subjects],
        "predicate": fact.predicate.value,
        "objects": [o.n3() for o in fact.objects],
    }


def _plan_dict(plan: DocumentPlan) -> list[dict[str, Any]]:
    return [{"subject": c.subject.value, "facts": [_fact_dict(f) for f in c.facts]} for c in plan]


def make_realiser(name: str, lexicon: Lexicon, settings: Mapping[str, Any]) -> Realiser:
    try:
        realiser_cls = REALISER_MAP[name]
    except KeyError:
        raise ConfigError(f"Unknown realiser '{name}'") from None
    return realiser_cls(
        lexicon,
        copula_past=settings.get("copula_past", "preterite"),
        max_per_sentence=settings.get("max_per_sentence", 3),
        balance_remainder=settings.get("balance_remainder", False),
        connectives=settings.get("connectives", ("Além disso",)),
    )


def replay_trace(trace: Mapping[str, Any], lexicon: Lexicon | None = None) -> str:
    """Run only the realiser over the clause plans recorded in *trace*."""
    if trace.get("schema_version") != TRACE_SCHEMA_VERSION:
        raise ConfigError(f"Unsupported trace schema version {trace.get('schema_version')!r}")
    lexicon = lexicon or default_lexicon()
    if lexicon.version != trace.get("lexicon_version"):
        logger.warning("Replaying trace made with lexicon %s using lexicon %s", trace.get("lexicon_version"), lexicon.version)
    settings = trace["realisation"]
    realiser = make_realiser(settings["realiser"], lexicon, settings)
    text, _ = realiser.realise_document([ClausePlan.from_dict(c) for c in trace["clause_plans"]])
    return text


# ----------------------------------------------------------------------
# Pipeline
# ----------------------------------------------------------------------
class Verbalizer:
    """Holds the knowledge base and linguistic resources shared by every resource of a run."""

    def __init__(
        self,
        config: PipelineConfig,
        kb: KnowledgeBase | None = None,
        lexicon: Lexicon | None = None,
        templates: Mapping[Iri, PropertyTemplate] | None = None,
    ) -> None:
        self.config = config
        self.kb = kb if kb is not None else self._open_kb(config)
        self.lexicon = lexicon if lexicon is not None else load_lexicon(
            config.lexicon.entries,
            config.lexicon.masculine_names,
            config.lexicon.feminine_names,
            config.lexicon.datatypes,
        )
        self.templates = templates if templates is not None else load_templates(config.templates)
        self._rankings: dict[Iri, PredicateRanking] = {}
        self._rankings_lock = threading.Lock()

    @staticmethod
    def _open_kb(config: PipelineConfig) -> KnowledgeBase:
        options = {"label_language": config.label_language, "class_namespace": config.class_namespace}
        if config.input is not None:
            path = Path(config.input)
            text = path.read_text(encoding="utf-8")
            if path.suffix == ".nt":
                graph = parse_ntriples(text)
            else:
                graph = parse_turtle_subset(text, config.prefixes)
            logger.info("Loaded %d triples from %s", len(graph), path)
            return KnowledgeBase.from_graph(graph, **options)
        if config.endpoint:
            logger.info("Using SPARQL endpoint %s", config.endpoint)
            return KnowledgeBase.from_endpoint(
                config.endpoint,
                timeout=config.timeout,
                retries=config.retries,
                page_size=config.page_size,
                **options,
            )
        raise ConfigError("Neither an endpoint nor an input file is configured")

    def __enter__(self) -> "Verbalizer":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.close()

    def close(self) -> None:
        self.kb.close()

    # ------------------------------------------------------------------
    # Stages
    # ------------------------------------------------------------------
    def ranking(self, class_iri: Iri) -> PredicateRanking:
        with self._rankings_lock:
            cached = self._rankings.get(class_iri)
        if cached is not None:
            return cached
        cfg = self.config
        # computed unlocked; a concurrent duplicate is dropped and the first stored ranking wins
        ranking = ranking_for(self.kb, class_iri, cfg.ranking_cache, cfg.damping, cfg.epsilon, cfg.max_iter)
        with self._rankings_lock:
            return self._rankings.setdefault(class_iri, ranking)

    def _coordinated_subject(self, lexicalizer: Lexicalizer, fact: Fact) -> Lexicalization:
        if len(fact.subjects) == 1:
            return lexicalizer.resource(fact.subject)
        lexes = [lexicalizer.resource(s) for s in fact.subjects]
        feminine = all(lex.gender is Gender.FEMININE for lex in lexes)
        return Lexicalization(
            phrase=coordinate([lex.phrase for lex in lexes]),
            category=Category.NOUN_PHRASE,
            gender=Gender.FEMININE if feminine else Gender.MASCULINE,
            number=Number.PLURAL,
            is_person=all(lex.is_person for lex in lexes),
            source="coordination",
        )

    def _clause(self, lexicalizer: Lexicalizer, fact: Fact, tense: Tense) -> ClausePlan:
        subject = self._coordinated_subject(lexicalizer, fact)
        if fact.is_type:
            predicate, shape = COPULA, Shape.COPULA_TYPE
        else:
            predicate = lexicalizer.prop(fact.predicate)
            shape = Shape.POSSESSIVE if predicate.category is Category.NOUN_PHRASE else Shape.VERBAL
        return ClausePlan(
            subject_ref=SubjectReference.full_name(subject),
            subject_lex=subject,
            predicate_lex=predicate,
            object_lexes=tuple(lexicalizer.obj(fact, o) for o in fact.objects),
            shape=shape,
            tense=self.config.tense_overrides.get(fact.predicate, tense),
            subject_iris=tuple(s.value for s in fact.subjects),
            predicate_iri=fact.predicate.value,
            object_terms=tuple(o.n3() for o in fact.objects),
        )

    @staticmethod
    def _subject_count(plan: DocumentPlan, lexicalizer: Lexicalizer) -> int:
        """Distinct subjects plus persons named as objects: every competing possessor."""
        possessors = {s for fact in plan.facts for s in fact.subjects}
        possessors |= {o for fact in plan.facts if not fact.is_type for o in fact.objects if lexicalizer.is_person(o)}
        return len(possessors)

    def verbalize_resource(self, resource: Iri) -> VerbalizationResult:
        cfg = self.config
        with stage("content-determination"):
            description = self.kb.describe(resource)
            class_iri = self.kb.most_specific_class(resource)
            ranking = self.ranking(class_iri)
            selection_notes: list[str] = []
            selected = select_content(
                self.kb, resource, ranking, cfg.top_k, cfg.excluded_predicates, diagnostics=selection_notes
            )
            if not selected:
                raise EmptySelectionError(resource.value)

        with stage("discourse-planning"):
            plan = plan_discourse(selected, ranking)
            if cfg.mode == "sentence":
                facts = plan.facts
                fact = next((f for f in facts if not f.is_type), facts[0])
                plan = DocumentPlan((SubjectCluster(fact.subject, (fact,)),))

        with stage("microplanning"):
            lexicalizer = Lexicalizer(
                self.kb,
                self.lexicon,
                self.templates,
                cfg.person_classes,
                cfg.determiner_classes,
                cfg.similarity_threshold,
            )
            tense = choose_tense(description, cfg.ending_predicates)
            aggregated = aggregate(plan, key=lexicalizer.signature)
            clauses = [self._clause(lexicalizer, fact, tense) for fact in aggregated.facts]
            subject_count = self._subject_count(aggregated, lexicalizer)
            if cfg.mode != "baseline":
                clauses = apply_coreference(clauses, subject_count)

        with stage("realisation"):
            realiser = make_realiser(
                BaselineRealiser.name if cfg.mode == "baseline" else ModelRealiser.name,
                self.lexicon,
                {
                    "copula_past": cfg.copula_past,
                    "max_per_sentence": cfg.max_per_sentence,
                    "balance_remainder": cfg.balance_remainder,
                    "connectives": cfg.connectives,
                },
            )
            text, realised = realiser.realise_document(clauses)

        trace = {
            "schema_version": TRACE_SCHEMA_VERSION,
            "resource": resource.value,
            "mode": cfg.mode,
            "lexicon_version": self.lexicon.version,
            "class": class_iri.value,
            "selected": [t.n3() for t in selected],
            "plan": _plan_dict(plan),
            "aggregated": _plan_dict(aggregated),
            "tense": tense.value,
            "subject_count": subject_count,
            "clause_plans": [c.to_dict() for c in clauses],
            "realised_clauses": realised,
            "realisation": realiser.settings(),
        }
        diagnostics = list(dict.fromkeys(selection_notes + lexicalizer.diagnostics + realiser.diagnostics))
        logger.info("Verbalized %s with %d clauses (%s mode)", resource, len(clauses), cfg.mode)
        return VerbalizationResult(resource, text, trace, diagnostics)

    async def verbalize_batch(self, resources: Sequence[Iri]) -> list[VerbalizationResult]:
        """Verbalize *resources* concurrently; results keep the input order.

        A failing resource yields a result carrying its error instead of
        stopping the batch.
        """
        semaphore = asyncio.Semaphore(self.config.parallelism)

        async def one(resource: Iri) -> VerbalizationResult:
            async with semaphore:
                try:
                    return await asyncio.to_thread(self.verbalize_resource, resource)
                except VerbalizerError as exc:
                    logger.error("Failed to verbalize %s: %s", resource, exc)
                    return VerbalizationResult(resource, error=exc)

        results = await asyncio.gather(*(one(r) for r in resources))
        failed = sum(1 for r in results if not r.ok)
        logger.info("Batch finished: %d resources, %d failed", len(results), failed)
        return list(results)


def verbalize_resource(cfg: PipelineConfig, resource: Iri) -> VerbalizationResult:
    with Verbalizer(cfg.validate(require_source=True)) as verbalizer:
        return verbalizer.verbalize_resource(resource)


async def verbalize_batch(cfg: PipelineConfig, resources: Iterable[Iri]) -> list[VerbalizationResult]:
    resources = list(resources)
    if not resources:
        return []
    with Verbalizer(cfg.validate(require_source=True)) as verbalizer:
        return await verbalizer.verbalize_batch(resources)
