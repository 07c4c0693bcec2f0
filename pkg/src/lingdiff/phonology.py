"""Pronunciation lexicon, syllable counting and consonant/stress tallies."""

from __future__ import annotations

import gzip
import logging
import os
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, NamedTuple, Optional, Union

from .ingest import orthographic_words
from .model import Document, FeatureCounts

log = logging.getLogger(__name__)

VOWELS = frozenset("AA AE AH AO AW AY EH ER EY IH IY OW OY UH UW".split())
MANNERS = ("plosive", "fricative", "affricate", "nasal", "lateral", "approximant")
PLACES = ("bilabial", "labiodental", "dental", "alveolar", "postalveolar", "palatal", "velar", "glottal")
VOICING = ("voiced", "voiceless")


class PhonemeInfo(NamedTuple):
    manner: Optional[str]
    place: Optional[str]
    voicing: Optional[str]
    is_vowel: bool


def _consonants() -> dict[str, PhonemeInfo]:
    manner = {
        "plosive": "P B T D K G", "fricative": "F V TH DH S Z SH ZH HH",
        "affricate": "CH JH", "nasal": "M N NG", "lateral": "L", "approximant": "R W Y",
    }
    # W is filed as bilabial and R as alveolar: one place per consonant.
    place = {
        "bilabial": "P B M W", "labiodental": "F V", "dental": "TH DH",
        "alveolar": "T D S Z N L R", "postalveolar": "SH ZH CH JH", "palatal": "Y",
        "velar": "K G NG", "glottal": "HH",
    }
    voiced = set("B D G V DH Z ZH JH M N NG L R W Y".split())
    by_manner = {p: m for m, ps in manner.items() for p in ps.split()}
    by_place = {p: pl for pl, ps in place.items() for p in ps.split()}
    return {
        p: PhonemeInfo(by_manner[p], by_place[p], "voiced" if p in voiced else "voiceless", False)
        for p in by_manner
    }


CONSONANTS: dict[str, PhonemeInfo] = _consonants()
CLASSIFICATION: dict[str, PhonemeInfo] = {
    **CONSONANTS,
    **{v: PhonemeInfo(None, None, None, True) for v in VOWELS},
}

# consonant-only pronunciations appended to a host word when "host+clitic" is not listed
CLITIC_PHONES = {"n't": ("N", "T"), "'s": ("Z",), "'re": ("R",), "'ve": ("V",),
                 "'ll": ("L",), "'d": ("D",), "'m": ("M",)}

VALID_SYMBOLS = frozenset(CONSONANTS) | {v + d for v in VOWELS for d in "012"}


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class Pronunciation:
    phonemes: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "phonemes", tuple(self.phonemes))
        bad = [ph for ph in self.phonemes if ph not in VALID_SYMBOLS]
        if bad:
            raise LexiconError(f"unknown ARPAbet symbol {bad[0]!r} (vowels need a stress digit 0-2)")

    def __iter__(self) -> Iterator[str]:
        return iter(self.phonemes)

    @property
    def vowels(self) -> list[str]:
        return [p for p in self.phonemes if p[-1] in "012"]

    @property
    def stresses(self) -> set[str]:
        return {p[-1] for p in self.vowels}

    def __add__(self, extra) -> "Pronunciation":
        return Pronunciation(self.phonemes + tuple(extra))


@dataclass(frozen=True)
class PhonLexicon:
    entries: Mapping[str, Pronunciation] = field(default_factory=dict)
    rejected: int = 0

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, word: str) -> Optional[Pronunciation]:
        return self.entries.get(word.lower())


def _open_text(path):
    path = os.fspath(path)
    if path.endswith(".gz"):
        return gzip.open(path, "rt", encoding="latin-1")
    return open(path, encoding="latin-1")


def parse_lexicon_lines(lines, source: str = "<lexicon>") -> PhonLexicon:
    entries: dict[str, Pronunciation] = {}
    rejected = 0
    for lineno, line in enumerate(lines, start=1):
        if line.startswith(";;;"):
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        word = parts[0].lower()
        if word.endswith(")") and re.search(r"\(\d+\)$", word):
            continue
        try:
            pron = Pronunciation(parts[1:])
        except LexiconError as exc:
            raise LexiconError(f"{source}:{lineno}: {exc}") from None
        if not pron.vowels:
            rejected += 1
            log.debug("%s:%d: %r has no vowel phoneme, skipped", source, lineno, word)
            continue
        entries.setdefault(word, pron)
    if rejected:
        log.warning("%s: %d entries without a vowel were rejected", source, rejected)
    return PhonLexicon(entries, rejected)


def load_lexicon(path: Union[str, os.PathLike]) -> PhonLexicon:
    """Read a CMU Pronouncing Dictionary file (plain or ``.gz``).

    Only the first listed variant of each word is kept. Entries whose
    pronunciation contains no vowel are dropped (and counted in ``rejected``).
    """
    with _open_text(path) as fh:
        return parse_lexicon_lines(fh, os.fspath(path))


@lru_cache(maxsize=4)
def load_lexicon_cached(path: str) -> PhonLexicon:
    return load_lexicon(path)


_VOWEL_GROUP = re.compile(r"[aeiouy]+")


def heuristic_syllables(word: str) -> int:
    """Count vowel-letter groups, dropping a silent final ``e`` (kept after consonant+``le``)."""
    w = "".join(ch for ch in word.lower() if ch.isalpha())
    count = len(_VOWEL_GROUP.findall(w))
    if (w.endswith("e") and len(w) > 1 and w[-2] not in "aeiouy"
            and not (w.endswith("le") and len(w) > 2 and w[-3] not in "aeiouy")):
        count -= 1
    return max(count, 1)


def syllable_count(word: str, lex: PhonLexicon) -> tuple[int, bool]:
    """Return ``(syllables, oov)`` for a word containing at least one letter."""
    if not any(ch.isalpha() for ch in word):
        raise ValueError(f"not an alphabetic word: {word!r}")
    pron = lex.lookup(word)
    if pron is not None:
        return len(pron.vowels), False
    return heuristic_syllables(word), True


def phonological_words(doc: Document) -> Iterator[str]:
    """Yield alphabetic orthographic words, re-joining split clitics with their host.

    The tokenizer separates ``don't`` into ``do`` + ``n't``; phonology looks the
    whole form up again so that clitics never count as words of their own.
    """
    for sent in doc.sentences:
        for word, host in orthographic_words(sent.tokens):
            if host.is_word:
                yield word


def pronounce(word: str, lex: PhonLexicon) -> Optional[Pronunciation]:
    pron = lex.lookup(word)
    if pron is not None:
        return pron
    low = word.lower()
    for clitic, phones in CLITIC_PHONES.items():
        if low.endswith(clitic) and len(low) > len(clitic):
            host = pronounce(word[: -len(clitic)], lex)
            return None if host is None else host + phones
    return None


def phonological_counts(doc: Document, lex: PhonLexicon) -> FeatureCounts:
    counts: Counter = Counter({name: 0 for name in
                               MANNERS + PLACES + VOICING +
                               ("vowel_phonemes", "syllables", "primary_stress", "secondary_stress")})
    words = oov = consonants = 0
    for word in phonological_words(doc):
        words += 1
        pron = pronounce(word, lex)
        if pron is None:
            oov += 1
            counts["syllables"] += heuristic_syllables(word)
            continue
        for ph in pron:
            base = ph.rstrip("012")
            info = CLASSIFICATION[base]
            if info.is_vowel:
                counts["vowel_phonemes"] += 1
            else:
                consonants += 1
                counts[info.manner] += 1
                counts[info.place] += 1
                counts[info.voicing] += 1
        counts["syllables"] += len(pron.vowels)
        stresses = pron.stresses
        counts["primary_stress"] += "1" in stresses
        counts["secondary_stress"] += "2" in stresses
    bases = {
        "total_words": words,
        "oov_words": oov,
        "total_consonants": consonants,
        "total_syllables": counts["syllables"],
        "total_vowel_phonemes": counts["vowel_phonemes"],
    }
    return FeatureCounts(dict(counts), bases)
