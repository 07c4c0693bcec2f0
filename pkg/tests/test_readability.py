import math
from fractions import Fraction as F

import pytest
from conftest import make_doc
from hypothesis import given
from hypothesis import strategies as st

from lingdiff.ingest import make_document
from lingdiff.readability import (TextStats, compute_readability, document_readability, linsear_write,
                                  mean_report, passive_sentences, text_stats)

# (text, (W, S, letters, syllables, complex, difficult, lw_easy, lw_hard, lw_sentences))
# tallies counted by hand from the CMU pronunciations and the easy-word list
FIXTURES = [
    ("Dogs run. Birds fly.", (4, 2, 15, 4, 0, 0, 4, 0, 2)),
    ("I saw a big dog. It ran away fast. We did not follow it.", (14, 3, 40, 16, 0, 0, 14, 0, 3)),
    ("Education is important for everybody.", (5, 1, 32, 13, 3, 1, 2, 3, 1)),
    ("The government introduced several unpopular regulations yesterday.", (7, 1, 59, 20, 5, 3, 2, 5, 1)),
    ("Children play outside. Parents watch them carefully.", (7, 2, 44, 12, 1, 1, 6, 1, 2)),
    ("She bought 3 apples and 12 oranges.", (7, 1, 28, 10, 1, 0, 6, 1, 1)),
    ("Technology changes society. However, people adapt quickly. Communication improves constantly.",
     (10, 3, 80, 29, 5, 5, 5, 5, 3)),
    ("Yes.", (1, 1, 3, 1, 0, 0, 1, 0, 1)),
    ("My family lives in a small house near the river. We have two dogs and one cat.",
     (17, 2, 60, 20, 1, 0, 16, 1, 2)),
    ("Unbelievable opportunities appear occasionally.", (4, 1, 43, 17, 3, 3, 1, 3, 1)),
]

# values computed independently in exact rational arithmetic (SMOG via a real square root)
EXPECTED = [
    dict(fre=120.205, fk=-3.01, fog=0.8, cli=-8.55, ari=-2.7675, smog=3.1291, linsear=0.0,
         dale_chall=0.0992),
    dict(fre=105.41261904761905, fk=-0.2842857142857143, fog=1.8666666666666667, cli=-5.3428571428571425,
         ari=-5.639523809523809, smog=3.1291, linsear=1.3333333333333333, dale_chall=0.23146666666666665),
    dict(fre=-18.2, fk=17.04, fog=26.0, cli=15.912, ari=11.214, smog=13.023866798666859, linsear=4.5,
         dale_chall=7.0425),
    dict(fre=-41.98428571428571, fk=20.854285714285716, fog=31.37142857142857, cli=29.53142857142857,
         ari=21.768571428571427, smog=15.903189008614273, linsear=7.5, dale_chall=10.750842857142857),
    dict(fre=58.253928571428574, fk=6.003571428571429, fog=7.114285714285714, cli=12.702857142857143,
         ari=9.925714285714285, smog=7.168621630094336, linsear=1.25, dale_chall=6.065814285714286),
    dict(fre=78.87285714285714, fk=3.9971428571428573, fog=8.514285714285714, cli=3.4914285714285715,
         ari=0.91, smog=8.841846274778883, linsear=3.5, dale_chall=0.3472),
    dict(fre=-41.888333333333335, fk=19.93, fog=21.333333333333332, cli=22.36, ari=17.916666666666668,
         smog=10.504223727775692, linsear=2.3333333333333335, dale_chall=11.696833333333334),
    dict(fre=121.22, fk=-3.4, fog=0.4, cli=-27.76, ari=-6.8, smog=3.1291, linsear=-0.5, dale_chall=0.0496),
    dict(fre=98.67808823529411, fk=1.6073529411764707, fog=5.752941176470588, cli=1.4705882352941178,
         ari=-0.5564705882352942, smog=7.168621630094336, linsear=3.75, dale_chall=0.4216),
    dict(fre=-156.775, fk=36.12, fog=31.6, cli=40.01, ari=31.2025, smog=13.023866798666859, linsear=4.0,
         dale_chall=15.6774),
]

FIELDS = dict(fre="flesch_reading_ease", fk="flesch_kincaid_grade", fog="gunning_fog", cli="coleman_liau",
              ari="ari", smog="smog", linsear="linsear_write", dale_chall="dale_chall")


def stats_of(tally):
    w, s, letters, syl, cplx, diff, lw_e, lw_h, lw_s = tally
    return TextStats(w, s, letters, syl, cplx, cplx, diff, lw_e, lw_h, lw_s)


def oracle(st_):
    """Exact rational evaluation of the formulas."""
    W, S = F(st_.words), F(st_.sentences)
    wps, spw = W / S, F(st_.syllables) / W
    dale = F("0.1579") * 100 * F(st_.difficult_words) / W + F("0.0496") * wps
    if F(st_.difficult_words) / W > F(1, 20):
        dale += F("3.6365")
    r = F(st_.linsear_easy + 3 * st_.linsear_hard, st_.linsear_sentences)
    return dict(
        fre=F("206.835") - F("1.015") * wps - F("84.6") * spw,
        fk=F("0.39") * wps + F("11.8") * spw - F("15.59"),
        fog=F("0.4") * (wps + 100 * F(st_.complex_words) / W),
        cli=F("0.0588") * 100 * F(st_.letters_and_digits) / W - F("0.296") * 100 * S / W - F("15.8"),
        ari=F("4.71") * F(st_.letters_and_digits) / W + F("0.5") * wps - F("21.43"),
        smog=F("1.0430") * F(math.sqrt(st_.polysyllables * 30 / st_.sentences)) + F("3.1291"),
        linsear=r / 2 if r > 20 else r / 2 - 1,
        dale_chall=dale,
    )


def test_cat_fixture(res):
    doc = make_document("The cat sat on the mat.", "cat")
    stats = text_stats(doc, res.lexicon, res.wordlist)
    assert stats == stats_of((6, 1, 17, 6, 0, 0, 6, 0, 1))
    r = compute_readability(stats)
    assert r.flesch_reading_ease == pytest.approx(116.145, abs=1e-6)
    assert r.flesch_kincaid_grade == pytest.approx(-1.45, abs=1e-6)
    assert r.gunning_fog == pytest.approx(2.4, abs=1e-6)
    assert r.ari == pytest.approx(-5.085, abs=1e-6)
    assert r.smog == pytest.approx(3.1291, abs=1e-6)
    assert r.coleman_liau == pytest.approx(0.0588 * 1700 / 6 - 0.296 * 100 / 6 - 15.8, abs=1e-9)


@pytest.mark.parametrize("text, tally", FIXTURES, ids=[t[:20] for t, _ in FIXTURES])
def test_fixture_tallies(res, text, tally):
    assert text_stats(make_document(text, "d"), res.lexicon, res.wordlist) == stats_of(tally)


@pytest.mark.parametrize("tally, expected", [(t, e) for (_, t), e in zip(FIXTURES, EXPECTED)],
                         ids=[t[:20] for t, _ in FIXTURES])
def test_fixture_scores(tally, expected):
    r = compute_readability(stats_of(tally))
    for key, value in expected.items():
        assert getattr(r, FIELDS[key]) == pytest.approx(value, abs=1e-6), key


@st.composite
def text_stats_values(draw):
    w = draw(st.integers(1, 5000))
    s = draw(st.integers(1, w))
    cplx = draw(st.integers(0, w))
    lw = min(w, 100)
    lw_h = draw(st.integers(0, lw))
    return TextStats(w, s, draw(st.integers(w, 12 * w)), draw(st.integers(w, 4 * w)), cplx, cplx,
                     draw(st.integers(0, w)), lw - lw_h, lw_h, draw(st.integers(1, s)))


@given(text_stats_values())
def test_formulas_match_rational_oracle(stats):
    r = compute_readability(stats)
    for key, value in oracle(stats).items():
        assert getattr(r, FIELDS[key]) == pytest.approx(float(value), rel=1e-9, abs=1e-9), key


@given(text_stats_values(), st.integers(1, 50))
def test_more_syllables_never_read_easier(stats, extra):
    harder = TextStats(stats.words, stats.sentences, stats.letters_and_digits, stats.syllables + extra,
                       stats.complex_words, stats.polysyllables, stats.difficult_words,
                       stats.linsear_easy, stats.linsear_hard, stats.linsear_sentences)
    a, b = compute_readability(stats), compute_readability(harder)
    assert b.flesch_reading_ease < a.flesch_reading_ease
    assert b.flesch_kincaid_grade > a.flesch_kincaid_grade


def test_linsear_branches():
    with pytest.raises(ValueError):
        linsear_write(TextStats(1, 1, 1, 1, 0, 0, 0))
    assert linsear_write(TextStats(1, 1, 1, 1, 0, 0, 0, 0, 3, 1)) == 9 / 2 - 1
    assert linsear_write(TextStats(1, 1, 1, 1, 0, 0, 0, 12, 3, 1)) == 21 / 2


def test_reading_time_and_bad_inputs():
    stats = stats_of((238, 10, 1000, 300, 10, 10, 90, 10, 5))
    assert compute_readability(stats).reading_time_sec == pytest.approx(60.0)
    assert compute_readability(stats, wpm=119).reading_time_sec == pytest.approx(120.0)
    with pytest.raises(ValueError):
        compute_readability(stats, wpm=0)
    with pytest.raises(ValueError):
        compute_readability(TextStats(0, 0, 0, 0, 0, 0, 0))


def test_dale_chall_adjustment_threshold():
    # exactly 5% difficult words: no adjustment; just above: +3.6365
    at = compute_readability(stats_of((100, 10, 400, 120, 0, 5, 100, 0, 10))).dale_chall
    above = compute_readability(stats_of((100, 10, 400, 120, 0, 6, 100, 0, 10))).dale_chall
    assert at == pytest.approx(0.1579 * 5 + 0.0496 * 10)
    assert above == pytest.approx(0.1579 * 6 + 0.0496 * 10 + 3.6365)


def test_passive_from_dependencies():
    rows = [("It", "PRON", 3, "nsubj:pass"), ("was", "AUX", 3, "aux:pass"), ("built", "VERB", 0, "root"),
            None, ("We", "PRON", 2, "nsubj"), ("built", "VERB", 0, "root"), ("it", "PRON", 2, "obj")]
    assert passive_sentences(make_doc(rows)) == (1, 50.0)


def test_passive_heuristic_without_parse():
    rows = [("It", "PRON"), ("was", "AUX"), ("quickly", "ADV"), ("written", "VERB"), None,
            ("They", "PRON"), ("got", "VERB"), ("tired", "ADJ"), None,
            ("He", "PRON"), ("is", "AUX"), ("walking", "VERB")]
    assert passive_sentences(make_doc(rows))[0] == 1


def test_document_readability_and_mean(res):
    doc = make_document("The cat sat on the mat.", "d")
    r1 = document_readability(doc, res.lexicon, res.wordlist)
    assert r1.passive_sentence_pct == 0.0  # untagged: no passive share
    r2 = compute_readability(stats_of(FIXTURES[0][1]))
    mean = mean_report([r1, r2])
    assert mean.flesch_reading_ease == pytest.approx((116.145 + 120.205) / 2)
    with pytest.raises(ValueError):
        mean_report([])


def test_numbers_only_document(res):
    stats = text_stats(make_document("12 34.", "n"), res.lexicon, res.wordlist)
    assert (stats.words, stats.syllables, stats.difficult_words) == (2, 2, 0)
    with pytest.raises(ValueError):
        text_stats(make_document("?!", "p"), res.lexicon, res.wordlist)


def test_contractions_are_single_words(res):
    stats = text_stats(make_document("We don't know. It's fine.", "d"), res.lexicon, res.wordlist)
    # we | don't | know / it's | fine: one syllable each, all familiar
    assert stats == stats_of((5, 2, 17, 5, 0, 0, 5, 0, 2))
