import pytest

from verbalizer.errors import ConjugationError, LexiconError, MalformedRowError, MissingVerbFormsError
from verbalizer.lexicon.features import Gender, Number, VerbTense
from verbalizer.lexicon.morphology import (
    best_similarity,
    guess_gender,
    inflect_participle,
    participle_lemma,
    pluralize,
    pluralize_phrase,
    similarity,
)
from verbalizer.lexicon.resources import PropertyTemplate, conjugate, load_lexicon, load_templates
from verbalizer.lexicon.tagging import LexiconTagger
from verbalizer.rdf.terms import Iri

from conftest import dbo

MINIMAL_LEXICON = """\
# forma\tlema\tpos\tgênero\tnúmero
é\tser\tV.PRES\t-\tsg
foi\tser\tV.PRET\t-\tsg
nasce\tnascer\tV.PRES\t-\tsg
nasceu\tnascer\tV.PRET\t-\tsg
falece\tfalecer\tV.PRES\t-\tsg
faleceu\tfalecer\tV.PRET\t-\tsg
cidade\tcidade\tN\tf\tsg
"""


def write_lexicon(tmp_path, entries: str, names: tuple[str, str] = ("Albert\n", "Marie\n")):
    (tmp_path / "lexicon.tsv").write_text(entries, encoding="utf-8")
    (tmp_path / "masc.txt").write_text(names[0], encoding="utf-8")
    (tmp_path / "fem.txt").write_text(names[1], encoding="utf-8")
    return load_lexicon(tmp_path / "lexicon.tsv", tmp_path / "masc.txt", tmp_path / "fem.txt")


# ----------------------------------------------------------------------
# Loading
# ----------------------------------------------------------------------
def test_default_lexicon_loads(lexicon):
    assert len(lexicon.version) == 16
    assert "Albert" in lexicon.masculine_names
    assert lexicon.noun_gender("física") is Gender.FEMININE
    assert lexicon.noun_gender("campo") is Gender.MASCULINE
    assert lexicon.datatype_names[Iri("http://dbpedia.org/datatype/squareKilometre")].plural == "quilômetros quadrados"


def test_minimal_lexicon(tmp_path):
    lex = write_lexicon(tmp_path, MINIMAL_LEXICON)
    assert lex.conjugate("ser", VerbTense.PRETERITE, Number.SINGULAR) == "foi"
    assert lex.lookup("Cidade")[0].gender is Gender.FEMININE
    assert lex.datatype_names == {}


def test_version_follows_content(tmp_path):
    first = write_lexicon(tmp_path, MINIMAL_LEXICON)
    second = write_lexicon(tmp_path, MINIMAL_LEXICON + "campo\tcampo\tN\tm\tsg\n")
    assert first.version != second.version


def test_malformed_row_reports_line(tmp_path):
    with pytest.raises(MalformedRowError) as info:
        write_lexicon(tmp_path, MINIMAL_LEXICON + "campo\tcampo\tN\tm\n")
    assert info.value.line == 9
    assert info.value.path.endswith("lexicon.tsv")


@pytest.mark.parametrize(
    "row",
    [
        "campo\tcampo\tXYZ\tm\tsg\n",
        "campo\tcampo\tN\tx\tsg\n",
        "campo\tcampo\tN\tm\tdual\n",
        "campo\t\tN\tm\tsg\n",
    ],
)
def test_invalid_columns(tmp_path, row):
    with pytest.raises(MalformedRowError):
        write_lexicon(tmp_path, MINIMAL_LEXICON + row)


def test_mandatory_verbs_required(tmp_path):
    without_nascer = "\n".join(line for line in MINIMAL_LEXICON.splitlines() if "nascer" not in line) + "\n"
    with pytest.raises(MissingVerbFormsError, match="nascer"):
        write_lexicon(tmp_path, without_nascer)


def test_listed_verb_needs_present_and_preterite(tmp_path):
    with pytest.raises(MissingVerbFormsError, match="morar"):
        write_lexicon(tmp_path, MINIMAL_LEXICON + "mora\tmorar\tV.PRES\t-\tsg\n")


def test_missing_file(tmp_path):
    with pytest.raises(LexiconError):
        load_lexicon(tmp_path / "nope.tsv", tmp_path / "masc.txt", tmp_path / "fem.txt")


# ----------------------------------------------------------------------
# Verbs
# ----------------------------------------------------------------------
def test_conjugation_from_table(lexicon):
    assert conjugate(lexicon, "ser", "present", "singular") == "é"
    assert conjugate(lexicon, "ser", "imperfect", "plural") == "eram"
    assert conjugate(lexicon, "nascer", VerbTense.PRETERITE, Number.PLURAL) == "nasceram"


def test_regular_conjugation(lexicon):
    assert conjugate(lexicon, "morar", "preterite", "singular") == "morou"
    assert conjugate(lexicon, "viver", "present", "plural") == "vivem"
    assert conjugate(lexicon, "partir", "preterite", "plural") == "partiram"
    with pytest.raises(ConjugationError):
        conjugate(lexicon, "pôr", "present", "singular")


def test_participles(lexicon):
    assert lexicon.participle("conhecer", Gender.FEMININE, Number.SINGULAR) == "conhecida"
    assert lexicon.participle("conhecer", Gender.UNKNOWN, Number.PLURAL) == "conhecidos"
    assert lexicon.participle("escrever", Gender.MASCULINE, Number.PLURAL) == "escritos"
    assert lexicon.participle("dirigir", Gender.FEMININE, Number.PLURAL) == "dirigidas"
    with pytest.raises(ConjugationError):
        lexicon.participle("pôr", Gender.MASCULINE, Number.SINGULAR)


# ----------------------------------------------------------------------
# Templates
# ----------------------------------------------------------------------
def test_shipped_templates(templates):
    assert templates[dbo("birthPlace")] == PropertyTemplate("nascer", "em")
    assert templates[dbo("author")].passive
    assert templates[dbo("author")].preposition == "por"


def test_template_without_preposition(tmp_path):
    path = tmp_path / "templates.tsv"
    path.write_text("http://dbpedia.org/ontology/influenced\tinfluenciar\t-\n", encoding="utf-8")
    assert load_templates(path)[dbo("influenced")] == PropertyTemplate("influenciar", None, "active")


def test_template_with_unknown_voice(tmp_path):
    path = tmp_path / "templates.tsv"
    path.write_text("# cabeçalho\nhttp://dbpedia.org/ontology/author\tescrever\tpor\tmedial\n", encoding="utf-8")
    with pytest.raises(MalformedRowError) as info:
        load_templates(path)
    assert info.value.line == 2


# ----------------------------------------------------------------------
# Morphology
# ----------------------------------------------------------------------
@pytest.mark.parametrize(
    "word, gender",
    [
        ("sistema", Gender.MASCULINE),
        ("nação", Gender.FEMININE),
        ("cidade", Gender.FEMININE),
        ("casa", Gender.FEMININE),
        ("campo", Gender.MASCULINE),
        ("professor", Gender.MASCULINE),
        ("xyz", Gender.UNKNOWN),
    ],
)
def test_guess_gender(word, gender):
    assert guess_gender(word) is gender


@pytest.mark.parametrize(
    "singular, plural",
    [("cidade", "cidades"), ("nação", "nações"), ("animal", "animais"), ("flor", "flores"), ("homem", "homens")],
)
def test_pluralize(singular, plural):
    assert pluralize(singular) == plural


def test_pluralize_phrase():
    assert pluralize_phrase("quilômetro quadrado") == "quilômetros quadrados"
    assert pluralize_phrase("ano de vida") == "anos de vida"


def test_participle_helpers():
    assert participle_lemma("chamado") == "chamar"
    assert participle_lemma("conhecidas") == "conhecer"
    assert participle_lemma("ado") is None
    assert inflect_participle("conhecido", Gender.FEMININE, Number.PLURAL) == "conhecidas"


def test_similarity():
    assert similarity("kitten", "sitting") == pytest.approx(1 - 3 / 7)
    assert similarity("", "") == 1.0
    assert similarity("Albert", "albert") == 1.0
    assert similarity("abc", "") == 0.0
    assert similarity("Marie", "Maria") == pytest.approx(0.8)
    assert best_similarity("albert", {"Albert", "Carl"}) == 1.0
    assert best_similarity("Zzz", set()) == 0.0


def test_tagger(lexicon):
    tagger = LexiconTagger(lexicon)
    assert tagger.tag("conhecido")[0].pos == "PCP"
    guessed = tagger.tag("chamada")[0]
    assert (guessed.pos, guessed.lemma, guessed.gender) == ("PCP", "chamar", Gender.FEMININE)
    assert tagger.tag("montanha")[0].gender is Gender.FEMININE
    assert tagger.tag("xyz") == []
