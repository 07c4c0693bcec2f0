"""Classic readability formulas over shared text statistics."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields
from statistics import fmean
from typing import Iterable, Optional

from .features import AnnotationError, WordList, is_easy
from .ingest import orthographic_words
from .model import Corpus, Document
from .phonology import PhonLexicon, syllable_count

DEFAULT_WPM = 238.0

BE_GET_FORMS = frozenset(
    "am is are was were be been being get gets got gotten getting".split()
)
IRREGULAR_PARTICIPLES = frozenset("""
    arisen awoken beaten become begun bent bet bid bitten bled blown broken bred brought
    built burnt burst bought cast caught chosen clung come cost crept cut dealt dug done
    drawn dreamt drunk driven eaten fallen fed felt fought found fled flung flown forbidden
    forgotten forgiven frozen given gone ground grown hung had heard hidden hit held hurt
    kept knelt known laid led leant learnt left lent let lain lit lost made meant met paid
    put quit read rid ridden rung risen run said seen sought sold sent set sewn shaken shed
    shone shot shown shrunk shut sung sunk sat slain slept slid spoken sped spent spilt spun
    spread sprung stood stolen stuck stung struck sworn swept swum swung taken taught torn
    told thought thrown understood undertaken upset woken worn woven wept won wound written
""".split())

READABILITY_LABELS = {
    "reading_time_sec": "Est. Reading Time (sec)",
    "flesch_reading_ease": "Flesch Reading Ease",
    "flesch_kincaid_grade": "Flesch-Kincaid Grad. Lvl",
    "gunning_fog": "Gunning Fog Index",
    "coleman_liau": "Coleman-Liau Index",
    "ari": "Automat. Read/ty Index",
    "smog": "Smog Index",
    "linsear_write": "Linsear Write Formula",
    "passive_sentence_pct": "Passive Sentences %",
    "dale_chall": "Dale Chall Read/ty Score",
    "difficult_words": "Difficult words",
}


@dataclass(frozen=True)
class TextStats:
    words: int
    sentences: int
    letters_and_digits: int
    syllables: int
    complex_words: int
    polysyllables: int
    difficult_words: int
    # Linsear Write sample (first 100 words)
    linsear_easy: int = 0
    linsear_hard: int = 0
    linsear_sentences: int = 0

    def __add__(self, other: "TextStats") -> "TextStats":
        return TextStats(*(a + b for a, b in zip(astuple_(self), astuple_(other))))


def astuple_(stats: TextStats) -> tuple:
    return tuple(getattr(stats, f.name) for f in fields(stats))


@dataclass(frozen=True)
class ReadabilityReport:
    reading_time_sec: float
    flesch_reading_ease: float
    flesch_kincaid_grade: float
    gunning_fog: float
    coleman_liau: float
    ari: float
    smog: float
    linsear_write: float
    passive_sentence_pct: float
    dale_chall: float
    difficult_words: float

    def to_dict(self) -> dict:
        return asdict(self)


def word_syllables(surface: str, lex: PhonLexicon) -> int:
    # numerals and other letterless words count as one syllable
    if not any(ch.isalpha() for ch in surface):
        return 1
    return syllable_count(surface, lex)[0]


def text_stats(doc: Document, lex: PhonLexicon, easy: WordList) -> TextStats:
    """Shared tallies; words are orthographic (``don't`` is one word)."""
    words = letters = syllables = complex_words = difficult = 0
    lw_easy = lw_hard = 0
    lw_sentences = 0
    sentences = 0
    for sent in doc.sentences:
        sent_words = list(orthographic_words(sent.tokens))
        if not sent_words:
            continue
        sentences += 1
        if words < 100:
            lw_sentences += 1
        for word, host in sent_words:
            syl = word_syllables(word, lex)
            if words < 100:
                if syl >= 3:
                    lw_hard += 1
                else:
                    lw_easy += 1
            words += 1
            letters += sum(ch.isalnum() for ch in word)
            syllables += syl
            complex_words += syl >= 3
            if host.is_word and not is_easy(host.lower, easy):
                difficult += 1
    if words == 0:
        raise ValueError(f"document {doc.id!r} contains no words")
    return TextStats(words, sentences, letters, syllables, complex_words, complex_words,
                     difficult, lw_easy, lw_hard, lw_sentences)


def _is_passive_heuristic(tokens) -> bool:
    words = [t for t in tokens if t.is_alnum_word]
    for i, tok in enumerate(words):
        if tok.lower not in BE_GET_FORMS:
            continue
        for nxt in words[i + 1:i + 4]:
            if nxt.xpos is not None:
                if nxt.xpos == "VBN":
                    return True
            elif nxt.upos == "VERB" and (nxt.lower.endswith(("ed", "en"))
                                         or nxt.lower in IRREGULAR_PARTICIPLES):
                return True
    return False


def passive_sentences(doc: Document) -> tuple[int, float]:
    """Count passive sentences; returns ``(count, percentage)``."""
    if not doc.is_tagged:
        raise AnnotationError(f"document {doc.id!r} is not POS-tagged")
    passive = 0
    for sent in doc.sentences:
        if sent.is_parsed:
            hit = any(t.deprel in ("nsubj:pass", "aux:pass") for t in sent.tokens)
        else:
            hit = _is_passive_heuristic(sent.tokens)
        passive += hit
    n = len(doc.sentences)
    return passive, (100.0 * passive / n if n else 0.0)


def linsear_write(stats: TextStats) -> float:
    if stats.linsear_sentences <= 0:
        raise ValueError("Linsear Write needs a sample of at least one sentence")
    r = (stats.linsear_easy + 3 * stats.linsear_hard) / stats.linsear_sentences
    return r / 2 if r > 20 else r / 2 - 1


def compute_readability(stats: TextStats, doc: Optional[Document] = None,
                        wpm: float = DEFAULT_WPM) -> ReadabilityReport:
    """Apply every formula to ``stats``; ``doc`` is needed only for the passive share."""
    W, S = stats.words, stats.sentences
    if W <= 0 or S <= 0:
        raise ValueError("readability needs at least one word and one sentence")
    if wpm <= 0:
        raise ValueError("wpm must be positive")
    wps = W / S
    spw = stats.syllables / W
    letters_per_100 = 100.0 * stats.letters_and_digits / W
    sentences_per_100 = 100.0 * S / W
    pct_difficult = 100.0 * stats.difficult_words / W
    dale = 0.1579 * pct_difficult + 0.0496 * wps
    if stats.difficult_words / W > 0.05:
        dale += 3.6365
    passive_pct = passive_sentences(doc)[1] if doc is not None else 0.0
    return ReadabilityReport(
        reading_time_sec=60.0 * W / wpm,
        flesch_reading_ease=206.835 - 1.015 * wps - 84.6 * spw,
        flesch_kincaid_grade=0.39 * wps + 11.8 * spw - 15.59,
        gunning_fog=0.4 * (wps + 100.0 * stats.complex_words / W),
        coleman_liau=0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8,
        ari=4.71 * (stats.letters_and_digits / W) + 0.5 * wps - 21.43,
        smog=1.0430 * math.sqrt(stats.polysyllables * 30.0 / S) + 3.1291,
        linsear_write=linsear_write(stats),
        passive_sentence_pct=passive_pct,
        dale_chall=dale,
        difficult_words=stats.difficult_words,
    )


def document_readability(doc: Document, lex: PhonLexicon, easy: WordList,
                         wpm: float = DEFAULT_WPM) -> ReadabilityReport:
    return compute_readability(text_stats(doc, lex, easy), doc if doc.is_tagged else None, wpm)


def mean_report(reports: Iterable[ReadabilityReport]) -> ReadabilityReport:
    reports = list(reports)
    if not reports:
        raise ValueError("cannot average an empty set of reports")
    return ReadabilityReport(**{
        f.name: fmean(getattr(r, f.name) for r in reports) for f in fields(ReadabilityReport)
    })


def corpus_readability(corpus: Corpus, lex: PhonLexicon, easy: WordList,
                       wpm: float = DEFAULT_WPM) -> tuple[list[ReadabilityReport], ReadabilityReport]:
    """Per-document reports and their unweighted mean."""
    if not corpus.documents:
        raise ValueError(f"corpus {corpus.label!r} is empty")
    reports = [document_readability(d, lex, easy, wpm) for d in corpus.documents]
    return reports, mean_report(reports)
