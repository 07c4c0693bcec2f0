import pytest
from conftest import make_doc
from hypothesis import given, settings
from hypothesis import strategies as st

from lingdiff.features import (MORPH_FEATURES, AnnotationError, LabelMap, WordList, base_forms, is_easy,
                               lexical_counts, lexical_ratios, load_labelmap, load_wordlist,
                               morphological_counts, syntactic_counts)
from lingdiff.ingest import make_document
from lingdiff.model import UPOS_TAGS

# "The big dog sleeps in the house ."
HOUSE = [
    ("The", "DET", 3, "det"), ("big", "ADJ", 3, "amod"), ("dog", "NOUN", 4, "nsubj"),
    ("sleeps", "VERB", 0, "root"), ("in", "ADP", 7, "case"), ("the", "DET", 7, "det"),
    ("house", "NOUN", 4, "obl"), (".", "PUNCT", 4, "punct"),
]
EASY = WordList(frozenset("the big dog sleep in house cat run".split()))


def test_morphology_counts_words_only():
    fc = morphological_counts(make_doc(HOUSE))
    assert fc.get("determiner") == 2 and fc.get("noun") == 2 and fc.get("adposition") == 1
    assert fc.get("punctuation") == 0
    assert fc.bases["total_words"] == 7
    assert sum(fc.counts.values()) == 7


def test_syntax_counts_with_derived_rows():
    fc = syntactic_counts(make_doc(HOUSE))
    c = fc.counts
    assert (c["determiner"], c["adjectival_modifier"], c["nominal_subject"], c["root"]) == (2, 1, 1, 1)
    assert c["prepositional_modifier"] == 1  # "in" attached as case
    assert c["object_preposition"] == 1  # "house" is obl with an ADP case child
    assert c["case"] == 1 and c["obl"] == 1 and c["punct"] == 1
    assert fc.bases == {"total_tokens": 8, "total_sentences": 1}


def test_object_preposition_includes_subtypes():
    rows = [("He", "PRON", 2, "nsubj"), ("left", "VERB", 0, "root"), ("on", "ADP", 4, "case"),
            ("Monday", "PROPN", 2, "obl:tmod")]
    assert syntactic_counts(make_doc(rows)).get("object_preposition") == 1


def test_root_count_equals_sentences():
    rows = HOUSE + [None] + [("Birds", "NOUN", 2, "nsubj"), ("sing", "VERB", 0, "root")]
    fc = syntactic_counts(make_doc(rows))
    assert fc.get("root") == fc.bases["total_sentences"] == 2


def test_custom_label_map_has_no_derived_rows(tmp_path):
    path = tmp_path / "map.tsv"
    path.write_text("# custom scheme\nnsubj\tsubject\ncase\tpreposition\n")
    lm = load_labelmap(path)
    assert lm.scheme_id == "custom"
    fc = syntactic_counts(make_doc(HOUSE), lm)
    assert fc.get("subject") == 1 and fc.get("preposition") == 1
    assert fc.get("object_preposition") == 0
    path.write_text("nsubj subject\n")
    with pytest.raises(ValueError, match="map.tsv:1"):
        load_labelmap(path)


def test_bundled_label_map_matches_builtin(res):
    assert res.labelmap.scheme_id == "ud"
    assert dict(res.labelmap.pairs) == dict(LabelMap().pairs)


def test_lexical_counts():
    fc = lexical_counts(make_doc(HOUSE), EASY)
    c = fc.counts
    assert (c["easy_word"], c["difficult_word"]) == (7, 0)
    assert (c["content_word"], c["function_word"]) == (4, 3)
    assert c["types"] == 6 and c["hapax_legomena"] == 5  # "the" occurs twice (case-folded)


def test_repeated_word_ratios():
    fc = lexical_counts(make_doc([("the", "DET"), ("the", "DET"), ("the", "DET")]), EASY)
    assert (fc.get("types"), fc.get("hapax_legomena")) == (1, 0)
    assert lexical_ratios(fc) == {"ttr": pytest.approx(1 / 3), "hapax_ratio": 0.0}


@pytest.mark.parametrize("word, expected", [
    ("cats", True), ("running", True), ("sleeping", True), ("houses", True), ("education", False),
])
def test_inflection_stripping(word, expected):
    assert is_easy(word, EASY) is expected


def test_base_forms():
    assert base_forms("studies")[:2] == ["studies", "study"]
    assert "hop" in base_forms("hopped")
    assert base_forms("glass") == ["glass"]


def test_wordlist_loading(tmp_path):
    path = tmp_path / "easy.txt"
    path.write_text("# header\nApple\n\nbanana  # fruit\n")
    assert load_wordlist(path).words == {"apple", "banana"}
    path.write_text("# nothing\n")
    with pytest.raises(ValueError):
        load_wordlist(path)


def test_untagged_documents_rejected():
    doc = make_document("Dogs bark.", "d")
    with pytest.raises(AnnotationError):
        morphological_counts(doc)
    with pytest.raises(AnnotationError):
        syntactic_counts(doc)
    with pytest.raises(AnnotationError):
        lexical_counts(doc, EASY)


tagged_tokens = st.lists(
    st.tuples(st.sampled_from(["dog", "Run", "42", "x1", "!", "the", "ok"]), st.sampled_from(UPOS_TAGS)),
    min_size=1, max_size=30)


@settings(max_examples=200, deadline=None)
@given(tagged_tokens)
def test_lexical_and_morphology_partitions(rows):
    doc = make_doc(rows)
    lex = lexical_counts(doc, EASY)
    morph = morphological_counts(doc)
    words = lex.bases["total_words"]
    assert lex.get("easy_word") + lex.get("difficult_word") == words
    assert lex.get("content_word") + lex.get("function_word") <= words
    assert sum(morph.get(name) for name in MORPH_FEATURES.values()) == morph.bases["total_words"] == words
    assert lex.get("hapax_legomena") <= lex.get("types") <= words


def test_clitic_fragments_are_easy():
    rows = [("It", "PRON"), ("does", "AUX"), ("n't", "PART"), ("matter", "VERB")]
    fc = lexical_counts(make_doc(rows), WordList(frozenset(["it", "do", "matter"])))
    assert (fc.get("easy_word"), fc.get("difficult_word")) == (4, 0)
