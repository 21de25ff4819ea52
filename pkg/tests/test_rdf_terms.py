import pytest

from verbalizer.errors import TermError
from verbalizer.rdf.terms import (
    RDF_LANGSTRING,
    RDF_TYPE,
    XSD_INTEGER,
    XSD_STRING,
    Graph,
    Iri,
    Literal,
    Triple,
)

from conftest import dbo, dbr


def test_iri_rejects_relative_and_forbidden():
    with pytest.raises(TermError):
        Iri("Albert_Einstein")
    with pytest.raises(TermError):
        Iri("http://dbpedia.org/resource/Albert Einstein")
    with pytest.raises(TermError):
        Iri("")


def test_iri_local_name():
    assert dbr("Albert_Einstein").local_name == "Albert_Einstein"
    assert RDF_TYPE.local_name == "type"
    assert Iri("http://example.org/ns/").local_name == "ns"


def test_literal_defaults_and_language_coupling():
    assert Literal("Albert Einstein").datatype == XSD_STRING
    tagged = Literal("Albert Einstein", language="pt")
    assert tagged.datatype == RDF_LANGSTRING
    with pytest.raises(TermError):
        Literal("x", RDF_LANGSTRING)
    with pytest.raises(TermError):
        Literal("x", XSD_INTEGER, language="pt")
    with pytest.raises(TermError):
        Literal("x", language="")


def test_empty_lexical_form_only_for_strings():
    assert Literal("").n3() == '""'
    with pytest.raises(TermError):
        Literal("", XSD_INTEGER)


def test_literal_n3_escapes():
    assert Literal('diz "oi"\n').n3() == '"diz \\"oi\\"\\n"'
    assert Literal("123", XSD_INTEGER).n3() == '"123"^^<http://www.w3.org/2001/XMLSchema#integer>'
    assert Literal("Alemanha", language="pt").n3() == '"Alemanha"@pt'


def test_triple_requires_iri_subject():
    with pytest.raises(TermError):
        Triple(Literal("x"), RDF_TYPE, dbo("Scientist"))


def test_graph_is_a_set_with_canonical_order():
    a = Triple(dbr("Ulm"), RDF_TYPE, dbo("City"))
    b = Triple(dbr("Albert_Einstein"), RDF_TYPE, dbo("Scientist"))
    graph = Graph.of([a, b, a])
    assert len(graph) == 2
    assert list(graph) == [b, a]
    assert graph.add(a) is graph
    assert b in graph.union(Graph.of([a]))
    assert not Graph()


def test_language_tags_are_lowercased():
    assert Literal("Ulm", language="pt-BR") == Literal("Ulm", language="pt-br")
    assert Literal("Ulm", language="pt-BR").n3() == '"Ulm"@pt-br'
