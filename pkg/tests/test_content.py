import pytest

from verbalizer.errors import ConfigError
from verbalizer.kb.knowledge_base import KnowledgeBase
from verbalizer.planning.content import (
    DEFAULT_EXCLUDED,
    PredicateRanking,
    cache_path,
    rank_predicates,
    ranking_for,
    select_content,
)
from verbalizer.planning.discourse import Fact, plan_discourse
from verbalizer.rdf.terms import RDF_TYPE, RDFS_LABEL, Triple
from verbalizer.rdf.turtle import parse_turtle_subset

from conftest import EINSTEIN_TURTLE, SAMPLE_PREFIXES, dbo, dbr

SCIENTIST_TOP_7 = {
    RDF_TYPE,
    dbo("field"),
    dbo("deathPlace"),
    dbo("almaMater"),
    dbo("knownFor"),
    dbo("award"),
    dbo("doctoralStudent"),
}


def _ordered_triples(text: str) -> list[Triple]:
    """Parse line by line so the triples keep their source order."""
    return [t for line in text.splitlines() if line.strip() for t in parse_turtle_subset(line, SAMPLE_PREFIXES)]


# ----------------------------------------------------------------------
# PredicateRanking
# ----------------------------------------------------------------------
def test_ranking_orders_by_score_then_iri():
    ranking = PredicateRanking.build(dbo("Scientist"), {dbo("b"): 0.5, dbo("a"): 0.5, dbo("c"): 0.9})
    assert ranking.predicates == [dbo("c"), dbo("a"), dbo("b")]
    assert ranking.position(dbo("a")) == 1
    assert ranking.position(dbo("unknown")) == 3


def test_ranking_rejects_bad_scores_and_order():
    with pytest.raises(ValueError):
        PredicateRanking(dbo("Scientist"), ((dbo("a"), -1.0),))
    with pytest.raises(ValueError):
        PredicateRanking(dbo("Scientist"), ((dbo("a"), float("nan")),))
    with pytest.raises(ValueError):
        PredicateRanking(dbo("Scientist"), ((dbo("a"), 0.1), (dbo("b"), 0.2)))


def test_top_k():
    ranking = PredicateRanking.build(dbo("Scientist"), {RDFS_LABEL: 0.9, dbo("a"): 0.5, dbo("b"): 0.1})
    assert ranking.top(1) == [RDFS_LABEL]
    assert ranking.top(1, DEFAULT_EXCLUDED) == [dbo("a")]
    assert ranking.top(10, DEFAULT_EXCLUDED) == [dbo("a"), dbo("b")]
    with pytest.raises(ValueError):
        ranking.top(0)


def test_ranking_tsv_round_trip(tmp_path):
    ranking = PredicateRanking.build(dbo("Scientist"), {dbo("a"): 0.123456789012345, dbo("b"): 0.0})
    path = tmp_path / "nested" / "ranking.tsv"
    ranking.save(path)
    assert path.read_text().splitlines()[0].startswith("http://dbpedia.org/ontology/a\t")
    assert PredicateRanking.load(path, dbo("Scientist")) == ranking


@pytest.mark.parametrize(
    "content",
    ["", "http://dbpedia.org/ontology/a\tmuito\n", "http://dbpedia.org/ontology/a\n", "relative\t0.5\n"],
)
def test_broken_cache_file(tmp_path, content):
    path = tmp_path / "ranking.tsv"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ConfigError, match="ranking.tsv"):
        PredicateRanking.load(path, dbo("Scientist"))


def test_cache_path_is_filesystem_safe(tmp_path):
    assert cache_path(tmp_path, dbo("Scientist")) == tmp_path / "http_dbpedia_org_ontology_Scientist.tsv"


def test_cached_ranking_is_reused(scientists_kb, tmp_path):
    computed = ranking_for(scientists_kb, dbo("Scientist"), cache_dir=tmp_path)
    # no knowledge base: only the cache can answer
    reloaded = ranking_for(None, dbo("Scientist"), cache_dir=tmp_path)
    assert reloaded.predicates == computed.predicates
    assert [s for _, s in reloaded.scores] == pytest.approx([s for _, s in computed.scores])


def test_cache_written_after_computation(scientists_kb, tmp_path):
    computed = ranking_for(scientists_kb, dbo("Scientist"), cache_dir=tmp_path)
    path = cache_path(tmp_path, dbo("Scientist"))
    assert path.exists()
    assert PredicateRanking.load(path, dbo("Scientist")).predicates == computed.predicates


# ----------------------------------------------------------------------
# Content selection
# ----------------------------------------------------------------------
def test_computed_scientist_ranking(scientists_kb):
    ranking = ranking_for(scientists_kb, dbo("Scientist"))
    assert ranking.predicates[0] == RDF_TYPE
    assert set(ranking.top(7, DEFAULT_EXCLUDED)) == SCIENTIST_TOP_7


def test_computed_ranking_order(scientists_kb):
    # the summary golden text follows this order; it comes from PageRank alone
    ranking = ranking_for(scientists_kb, dbo("Scientist"))
    assert ranking.top(10, DEFAULT_EXCLUDED) == [
        RDF_TYPE,
        dbo("field"),
        dbo("deathPlace"),
        dbo("almaMater"),
        dbo("knownFor"),
        dbo("award"),
        dbo("doctoralStudent"),
        dbo("influenced"),
        dbo("birthPlace"),
        dbo("spouse"),
    ]


def test_literal_only_predicates_score_zero(scientists_kb):
    ranking = ranking_for(scientists_kb, dbo("Scientist"))
    scores = dict(ranking.scores)
    assert scores[dbo("birthDate")] == 0.0
    assert scores[RDFS_LABEL] == 0.0


def test_select_top_7(scientists_kb):
    ranking = ranking_for(scientists_kb, dbo("Scientist"))
    selected = select_content(scientists_kb, dbr("Albert_Einstein"), ranking, k=7)
    assert {t.predicate for t in selected} == SCIENTIST_TOP_7
    assert dbo("spouse") not in {t.predicate for t in selected}


def test_select_top_1_keeps_only_type(scientists_kb):
    ranking = ranking_for(scientists_kb, dbo("Scientist"))
    selected = select_content(scientists_kb, dbr("Albert_Einstein"), ranking, k=1)
    assert selected == [Triple(dbr("Albert_Einstein"), RDF_TYPE, dbo("Scientist"))]


def test_select_honours_exclusion(scientists_kb):
    ranking = ranking_for(scientists_kb, dbo("Scientist"))
    selected = select_content(scientists_kb, dbr("Albert_Einstein"), ranking, k=7, exclude={RDF_TYPE})
    predicates = {t.predicate for t in selected}
    assert RDF_TYPE not in predicates
    assert SCIENTIST_TOP_7 - {RDF_TYPE} <= predicates


def test_select_skips_empty_literals():
    graph = parse_turtle_subset(
        ':Tom_Jobim a dbo:Musician ; dbo:hobby "", " " ; dbo:nickname "Tom" .', SAMPLE_PREFIXES
    )
    kb = KnowledgeBase.from_graph(graph)
    ranking = PredicateRanking.build(dbo("Musician"), {RDF_TYPE: 0.5, dbo("hobby"): 0.2, dbo("nickname"): 0.1})
    diagnostics: list[str] = []
    selected = select_content(kb, dbr("Tom_Jobim"), ranking, diagnostics=diagnostics)
    assert {t.predicate for t in selected} == {RDF_TYPE, dbo("nickname")}
    assert len(diagnostics) == 2


def test_rank_predicates_sums_object_scores(scientists_kb):
    scores = {dbr("Physics"): 0.25, dbr("Princeton"): 0.5}
    ranking = rank_predicates(scientists_kb, dbo("Scientist"), scores)
    by_predicate = dict(ranking.scores)
    physicists = sum(1 for t in scientists_kb.instance_triples(dbo("Scientist")) if t.object == dbr("Physics"))
    assert by_predicate[dbo("field")] == pytest.approx(0.25 * physicists)
    assert by_predicate[dbo("deathPlace")] >= 0.5


# ----------------------------------------------------------------------
# Discourse planning
# ----------------------------------------------------------------------
SAMPLE_RANKING = PredicateRanking.build(
    dbr("Scientist"),
    {
        RDF_TYPE: 0.5,
        dbo("birthPlace"): 0.4,
        dbo("deathPlace"): 0.3,
        dbo("knownFor"): 0.2,
        dbo("Country"): 0.1,
    },
)


def test_document_plan_for_einstein():
    plan = plan_discourse(_ordered_triples(EINSTEIN_TURTLE), SAMPLE_RANKING)
    assert plan.subjects == [dbr("Albert_Einstein"), dbr("Ulm"), dbr("Princeton")]
    einstein, ulm, princeton = plan.clusters
    assert einstein.triples == [
        Triple(dbr("Albert_Einstein"), RDF_TYPE, dbr("Scientist")),
        Triple(dbr("Albert_Einstein"), dbo("birthPlace"), dbr("Ulm")),
        Triple(dbr("Albert_Einstein"), dbo("deathPlace"), dbr("Princeton")),
        Triple(dbr("Albert_Einstein"), dbo("knownFor"), dbr("General_relativity")),
        Triple(dbr("Albert_Einstein"), dbo("knownFor"), dbr("Brownian_motion")),
    ]
    assert ulm.triples == [
        Triple(dbr("Ulm"), RDF_TYPE, dbr("City")),
        Triple(dbr("Ulm"), dbo("Country"), dbr("Germany")),
    ]
    assert princeton.triples == [Triple(dbr("Princeton"), dbo("Country"), dbr("USA"))]


def test_plan_preserves_triples():
    triples = _ordered_triples(EINSTEIN_TURTLE)
    plan = plan_discourse(triples, SAMPLE_RANKING)
    assert sorted(plan.triples, key=lambda t: t.sort_key) == sorted(triples, key=lambda t: t.sort_key)
    assert all(len(fact.subjects) == 1 and len(fact.objects) == 1 for fact in plan.facts)


def test_plan_is_deterministic(scientists_kb):
    ranking = ranking_for(scientists_kb, dbo("Scientist"))
    triples = _ordered_triples(EINSTEIN_TURTLE)
    first = plan_discourse(triples, ranking)
    assert all(plan_discourse(list(triples), ranking) == first for _ in range(100))


def test_type_leads_even_when_unranked():
    triples = _ordered_triples(":Ulm dbo:Country :Germany.\n:Ulm rdf:type :City.")
    plan = plan_discourse(triples, PredicateRanking(dbr("City")))
    assert [fact.predicate for fact in plan.facts] == [RDF_TYPE, dbo("Country")]


def test_fact_from_triple():
    fact = Fact.of(Triple(dbr("Ulm"), RDF_TYPE, dbr("City")))
    assert fact.is_type
    assert fact.subject == dbr("Ulm")
    assert fact.triples() == [Triple(dbr("Ulm"), RDF_TYPE, dbr("City"))]
