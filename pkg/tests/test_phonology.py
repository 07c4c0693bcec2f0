import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lingdiff.ingest import make_document
from lingdiff.phonology import (CLASSIFICATION, CONSONANTS, MANNERS, PLACES, VOICING, VOWELS, LexiconError,
                                heuristic_syllables, parse_lexicon_lines, phonological_counts,
                                phonological_words, syllable_count)

ARPABET_CONSONANTS = set("B CH D DH F G HH JH K L M N NG P R S SH T TH V W Y Z ZH".split())


def partition_holds(fc):
    c, total = fc.counts, fc.bases["total_consonants"]
    return (sum(c[m] for m in MANNERS) == total and sum(c[p] for p in PLACES) == total
            and sum(c[v] for v in VOICING) == total)


def test_inventory_is_complete():
    assert set(CONSONANTS) == ARPABET_CONSONANTS
    assert len(CONSONANTS) == 24 and len(VOWELS) == 15
    for ph in ARPABET_CONSONANTS:
        info = CLASSIFICATION[ph]
        assert info.manner in MANNERS and info.place in PLACES and info.voicing in VOICING


@pytest.mark.parametrize("ph, manner, place, voicing", [
    ("L", "lateral", "alveolar", "voiced"),
    ("W", "approximant", "bilabial", "voiced"),
    ("R", "approximant", "alveolar", "voiced"),
    ("HH", "fricative", "glottal", "voiceless"),
    ("JH", "affricate", "postalveolar", "voiced"),
    ("NG", "nasal", "velar", "voiced"),
    ("Y", "approximant", "palatal", "voiced"),
])
def test_classification_examples(ph, manner, place, voicing):
    info = CLASSIFICATION[ph]
    assert (info.manner, info.place, info.voicing) == (manner, place, voicing)


def test_cat_sentence_counts(res):
    # DH AH0 | K AE1 T | S AE1 T | AA1 N | DH AH0 | M AE1 T
    fc = phonological_counts(make_document("The cat sat on the mat.", "d"), res.lexicon)
    c = fc.counts
    assert fc.bases["total_consonants"] == 9
    assert (c["plosive"], c["fricative"], c["nasal"]) == (4, 3, 2)
    assert (c["alveolar"], c["dental"], c["velar"], c["bilabial"]) == (5, 2, 1, 1)
    assert (c["voiced"], c["voiceless"]) == (4, 5)
    assert (c["syllables"], c["primary_stress"], c["secondary_stress"]) == (6, 4, 0)
    assert fc.bases["total_words"] == 6 and fc.bases["oov_words"] == 0


def test_clitics_rejoin_host(res):
    doc = make_document("I don't know.", "d")
    assert list(phonological_words(doc)) == ["I", "don't", "know"]
    fc = phonological_counts(doc, res.lexicon)
    assert fc.bases["total_words"] == 3
    assert fc.bases["total_consonants"] == 4  # D N T | N


def test_unknown_clitic_form_uses_host_phones():
    lex = parse_lexicon_lines(["BLORG  B L AO1 R G"])
    fc = phonological_counts(make_document("Blorg's here.", "d"), lex)
    # "blorg's" = B L AO1 R G + Z; "here" is out of vocabulary
    assert fc.bases["total_consonants"] == 5
    assert fc.counts["voiced"] == 5
    assert fc.bases["oov_words"] == 1


def test_syllables_lexicon_then_heuristic(res):
    assert syllable_count("make", res.lexicon) == (1, False)
    assert syllable_count("syllable", res.lexicon) == (3, False)
    assert syllable_count("blorptastic", res.lexicon) == (3, True)
    with pytest.raises(ValueError):
        syllable_count("42", res.lexicon)


@pytest.mark.parametrize("word, n", [
    ("make", 1), ("table", 2), ("syllable", 3), ("rhythm", 1), ("a", 1), ("queue", 1), ("be", 1),
    ("banana", 3),
])
def test_heuristic_syllables(word, n):
    assert heuristic_syllables(word) == n


def test_lexicon_parsing_rules():
    lex = parse_lexicon_lines([
        ";;; comment line",
        "READ  R IY1 D",
        "READ(1)  R EH1 D",
        "HMM  HH M  # no vowel",
        "",
        "TOMATO  T AH0 M EY1 T OW2",
    ])
    assert lex.lookup("read").phonemes == ("R", "IY1", "D")
    assert "hmm" not in lex and lex.rejected == 1
    assert lex.lookup("Tomato").stresses == {"0", "1", "2"}
    with pytest.raises(LexiconError, match="<lexicon>:2"):
        parse_lexicon_lines(["OK  OW1 K EY1", "BAD  B AE D"])
    with pytest.raises(LexiconError, match="QQ"):
        parse_lexicon_lines(["BAD  QQ AE1"])


words = st.text(alphabet="abcdefghijklmnopqrstuvwxyz'", min_size=1, max_size=10).filter(
    lambda w: any(ch.isalpha() for ch in w))


@settings(max_examples=200, deadline=None)
@given(st.lists(words, min_size=1, max_size=20))
def test_partition_property(res, ws):
    fc = phonological_counts(make_document(" ".join(ws) + ".", "d"), res.lexicon)
    assert partition_holds(fc)
    assert fc.bases["total_syllables"] >= fc.bases["total_words"]


def test_partition_on_bundled_essays(res, essays_dir):
    from lingdiff.ingest import load_corpus

    for side in ("human", "ai"):
        for doc in load_corpus(f"{essays_dir}/{side}", side):
            assert partition_holds(phonological_counts(doc, res.lexicon))
