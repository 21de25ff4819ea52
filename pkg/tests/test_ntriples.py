import pytest
import rdflib
from hypothesis import given, settings
from hypothesis import strategies as st

from verbalizer.errors import RdfSyntaxError, RelativeIriError, UnsupportedConstructError, UnterminatedLiteralError
from verbalizer.rdf.ntriples import parse_ntriples, serialize_ntriples
from verbalizer.rdf.terms import RDF_TYPE, XSD_NS, Graph, Iri, Literal, Triple

from conftest import dbo, dbr

EINSTEIN_NT = """\
<http://dbpedia.org/resource/Albert_Einstein> <http://dbpedia.org/ontology/deathPlace> <http://dbpedia.org/resource/Princeton> .
<http://dbpedia.org/resource/Princeton> <http://dbpedia.org/ontology/Country> <http://dbpedia.org/resource/USA> .
<http://dbpedia.org/resource/Albert_Einstein> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://dbpedia.org/resource/Scientist> .
<http://dbpedia.org/resource/Albert_Einstein> <http://dbpedia.org/ontology/knownFor> <http://dbpedia.org/resource/General_relativity> .
<http://dbpedia.org/resource/Albert_Einstein> <http://dbpedia.org/ontology/knownFor> <http://dbpedia.org/resource/Brownian_motion> .
<http://dbpedia.org/resource/Albert_Einstein> <http://dbpedia.org/ontology/birthPlace> <http://dbpedia.org/resource/Ulm> .
<http://dbpedia.org/resource/Ulm> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://dbpedia.org/resource/City> .
<http://dbpedia.org/resource/Ulm> <http://dbpedia.org/ontology/Country> <http://dbpedia.org/resource/Germany> .
"""


def test_statements_parse_into_eight_triples():
    graph = parse_ntriples(EINSTEIN_NT)
    assert len(graph) == 8
    assert Triple(dbr("Ulm"), RDF_TYPE, dbr("City")) in graph


def test_literals_with_language_and_datatype():
    graph = parse_ntriples(
        '<http://dbpedia.org/resource/Germany> <http://www.w3.org/2000/01/rdf-schema#label> "Alemanha"@pt .\n'
        '<http://dbpedia.org/resource/Ulm> <http://dbpedia.org/ontology/areaTotal> '
        '"118.69"^^<http://dbpedia.org/datatype/squareKilometre> .\n'
        '<http://dbpedia.org/resource/Ulm> <http://example.org/motto> "linha\\num \\u00e9" .\n'
    )
    objects = {t.object for t in graph}
    assert Literal("Alemanha", language="pt") in objects
    assert Literal("118.69", Iri("http://dbpedia.org/datatype/squareKilometre")) in objects
    assert Literal("linha\num é") in objects


def test_duplicates_collapse():
    line = "<http://a.org/s> <http://a.org/p> <http://a.org/o> .\n"
    assert len(parse_ntriples(line * 3)) == 1


def test_unterminated_literal_reports_position():
    with pytest.raises(UnterminatedLiteralError) as info:
        parse_ntriples('<http://a.org/s> <http://a.org/p> "open .\n')
    assert info.value.line == 1
    assert info.value.column == 35


def test_relative_iri_rejected():
    with pytest.raises(RelativeIriError):
        parse_ntriples("<s> <http://a.org/p> <http://a.org/o> .")


def test_blank_nodes_rejected():
    with pytest.raises(UnsupportedConstructError):
        parse_ntriples("_:b0 <http://a.org/p> <http://a.org/o> .")


def test_prefixed_names_are_not_ntriples():
    with pytest.raises(RdfSyntaxError):
        parse_ntriples("dbr:Ulm <http://a.org/p> <http://a.org/o> .")


def test_missing_terminator():
    with pytest.raises(RdfSyntaxError):
        parse_ntriples("<http://a.org/s> <http://a.org/p> <http://a.org/o>")


def test_syntax_error_names_the_failing_line():
    good = "<http://a.org/s> <http://a.org/p> <http://a.org/o> .\n"
    with pytest.raises(RdfSyntaxError) as info:
        parse_ntriples(good + good + "<http://a.org/s> <http://a.org/p> .\n")
    assert info.value.line == 3


def test_empty_input():
    assert parse_ntriples("") == Graph()


def test_directives_are_not_ntriples():
    with pytest.raises(RdfSyntaxError):
        parse_ntriples("@prefix ex: <http://example.org/> .")


def test_serialization_is_sorted_and_terminated():
    text = serialize_ntriples(parse_ntriples(EINSTEIN_NT))
    lines = text.splitlines()
    assert lines == sorted(lines)
    assert all(line.endswith(" .") for line in lines)
    assert text.endswith("\n")


def test_parser_agrees_with_rdflib():
    ours = parse_ntriples(EINSTEIN_NT)
    reference = rdflib.Graph().parse(data=EINSTEIN_NT, format="nt")
    assert {(t.subject.value, t.predicate.value, t.object.value) for t in ours} == {
        (str(s), str(p), str(o)) for s, p, o in reference
    }


# ----------------------------------------------------------------------
# Round trip over generated graphs
# ----------------------------------------------------------------------
_names = st.text(alphabet="abcdefghijklmnopqrstuvwxyzABCDEFGHIJ0123456789_-", min_size=1, max_size=12)
iris = st.builds(lambda ns, name: Iri(f"http://example.org/{ns}/{name}"), st.sampled_from(["r", "o", "p"]), _names)
plain_literals = st.builds(Literal, st.text(max_size=20))
tagged_literals = st.builds(
    lambda text, lang: Literal(text, language=lang), st.text(max_size=20), st.sampled_from(["pt", "en", "pt-BR"])
)
typed_literals = st.builds(
    lambda n, dt: Literal(str(n), Iri(XSD_NS + dt)), st.integers(), st.sampled_from(["integer", "int", "long"])
)
triples = st.builds(Triple, iris, iris, st.one_of(iris, plain_literals, tagged_literals, typed_literals))
graphs = st.builds(Graph.of, st.lists(triples, max_size=30))


@settings(max_examples=1000, deadline=None)
@given(graphs)
def test_round_trip(graph):
    assert parse_ntriples(serialize_ntriples(graph)) == graph
