"""Morphological, syntactic and lexical counts over annotated documents."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Union

from .ingest import is_clitic
from .model import Document, FeatureCounts

MORPH_FEATURES = {
    "ADJ": "adjective", "ADP": "adposition", "ADV": "adverb", "AUX": "auxiliary",
    "CCONJ": "coordinating_conjunction", "DET": "determiner", "INTJ": "interjection",
    "NOUN": "noun", "NUM": "numeral", "PART": "particle", "PRON": "pronoun",
    "PROPN": "proper_noun", "SCONJ": "subordinating_conjunction", "VERB": "verb",
    # not among the usual POS rows, kept so every word token lands somewhere
    "SYM": "symbol", "X": "other", "PUNCT": "punctuation",
}
CONTENT_UPOS = frozenset({"NOUN", "PROPN", "VERB", "ADJ", "ADV"})
FUNCTION_UPOS = frozenset({"ADP", "AUX", "CCONJ", "SCONJ", "DET", "PRON", "PART"})

UD_LABELS = {
    "amod": "adjectival_modifier",
    "advmod": "adverbial_modifier",
    "conj": "conjunct",
    "det": "determiner",
    "obj": "direct_object",
    "nsubj": "nominal_subject",
    "nsubj:pass": "nominal_subject",
    "root": "root",
}
SYNTAX_FEATURES = (
    "adjectival_modifier", "adverbial_modifier", "conjunct", "determiner", "direct_object",
    "nominal_subject", "object_preposition", "prepositional_modifier", "root",
)


class AnnotationError(ValueError):
    pass


@dataclass(frozen=True)
class LabelMap:
    """Maps raw dependency labels onto reported feature names.

    With ``scheme_id == "ud"`` two derived counts are added:
    ``object_preposition`` (an ``nmod``/``obl`` dependent that has an ADP
    ``case`` child) and ``prepositional_modifier`` (an ADP attached as ``case``).
    """

    pairs: Mapping[str, str] = field(default_factory=lambda: dict(UD_LABELS))
    scheme_id: str = "ud"

    def name(self, label: str) -> str:
        return self.pairs.get(label, label)


UD_MAP = LabelMap()


def load_labelmap(path: Union[str, os.PathLike]) -> LabelMap:
    """Read ``raw_label<TAB>feature_name`` lines; ``scheme_id=<id>`` selects derived rules."""
    pairs: dict[str, str] = {}
    scheme = "custom"
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            if line.startswith("scheme_id="):
                scheme = line.split("=", 1)[1].strip()
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not all(p.strip() for p in parts):
                raise ValueError(f"{path}:{lineno}: expected raw_label<TAB>feature_name")
            pairs[parts[0].strip()] = parts[1].strip()
    return LabelMap(pairs, scheme)


@dataclass(frozen=True)
class WordList:
    words: frozenset
    name: str = "easy_words"

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(self.words))
        if not self.words:
            raise ValueError("word list is empty")
        if any(w != w.lower() for w in self.words):
            raise ValueError("word list entries must be lowercase")

    def __contains__(self, word: str) -> bool:
        return word in self.words


def load_wordlist(path: Union[str, os.PathLike], name: str | None = None) -> WordList:
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip().lower()
            if line:
                words.add(line)
    return WordList(frozenset(words), name or os.path.basename(os.fspath(path)))


def base_forms(word: str) -> list[str]:
    """Candidate dictionary forms after stripping -s, -es, -ed and -ing."""
    w = word.lower()
    out = [w]

    def add(stem: str):
        if len(stem) >= 2 and stem not in out:
            out.append(stem)

    def undouble(stem: str):
        if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in "aeiouslz":
            add(stem[:-1])

    if w.endswith("ies") and len(w) > 4:
        add(w[:-3] + "y")
    if w.endswith("es"):
        add(w[:-2])
    if w.endswith("s") and not w.endswith("ss"):
        add(w[:-1])
    if w.endswith("ied") and len(w) > 4:
        add(w[:-3] + "y")
    if w.endswith("ed"):
        stem = w[:-2]
        add(stem)
        add(stem + "e")
        undouble(stem)
    if w.endswith("ing") and len(w) > 4:
        stem = w[:-3]
        add(stem)
        add(stem + "e")
        undouble(stem)
    return out


def is_easy(word: str, easy: WordList) -> bool:
    return any(form in easy for form in base_forms(word))


def _require_tags(doc: Document):
    if not doc.is_tagged:
        raise AnnotationError(f"document {doc.id!r} is not POS-tagged")


def morphological_counts(doc: Document) -> FeatureCounts:
    _require_tags(doc)
    counts = Counter({name: 0 for name in MORPH_FEATURES.values()})
    words = 0
    for tok in doc.tokens():
        if tok.is_word:
            words += 1
            counts[MORPH_FEATURES[tok.upos]] += 1
    return FeatureCounts(dict(counts), {"total_words": words})


def syntactic_counts(doc: Document, labelmap: LabelMap = UD_MAP) -> FeatureCounts:
    if not doc.is_parsed:
        raise AnnotationError(f"document {doc.id!r} has no dependency annotation")
    counts = Counter({name: 0 for name in SYNTAX_FEATURES})
    tokens = 0
    for sent in doc.sentences:
        toks = sent.tokens
        tokens += len(toks)
        for tok in toks:
            counts[labelmap.name(tok.deprel)] += 1
        if labelmap.scheme_id == "ud":
            has_case_adp = set()
            for tok in toks:
                if tok.deprel == "case" and tok.head:
                    if tok.upos == "ADP":
                        counts["prepositional_modifier"] += 1
                        has_case_adp.add(tok.head)
            for i, tok in enumerate(toks, start=1):
                if tok.deprel.split(":")[0] in ("nmod", "obl") and i in has_case_adp:
                    counts["object_preposition"] += 1
    return FeatureCounts(dict(counts), {"total_tokens": tokens, "total_sentences": len(doc.sentences)})


LEXICAL_FEATURES = ("easy_word", "difficult_word", "content_word", "function_word",
                    "hapax_legomena", "types")


def lexical_counts(doc: Document, easy: WordList) -> FeatureCounts:
    _require_tags(doc)
    counts = Counter({name: 0 for name in LEXICAL_FEATURES})
    freq: Counter = Counter()
    words = 0
    for tok in doc.tokens():
        if not tok.is_word:
            continue
        words += 1
        freq[tok.lower] += 1
        # split clitics (n't, 's) are fragments of everyday forms, never difficult
        counts["easy_word" if is_clitic(tok.surface) or is_easy(tok.lower, easy) else "difficult_word"] += 1
        if tok.upos in CONTENT_UPOS:
            counts["content_word"] += 1
        elif tok.upos in FUNCTION_UPOS:
            counts["function_word"] += 1
    counts["types"] = len(freq)
    counts["hapax_legomena"] = sum(1 for c in freq.values() if c == 1)
    return FeatureCounts(dict(counts), {"total_words": words})


def lexical_ratios(fc: FeatureCounts) -> dict[str, float]:
    """Type-token ratio and hapax ratio (descriptive only, never tested)."""
    words = fc.bases.get("total_words", 0)
    if not words:
        return {"ttr": 0.0, "hapax_ratio": 0.0}
    return {"ttr": fc.get("types") / words, "hapax_ratio": fc.get("hapax_legomena") / words}


def feature_counts(doc: Document, lex, easy: WordList, labelmap: LabelMap = UD_MAP) -> dict[str, FeatureCounts]:
    """All four count levels for one annotated document."""
    from .phonology import phonological_counts

    return {
        "phonology": phonological_counts(doc, lex),
        "morphology": morphological_counts(doc),
        "syntax": syntactic_counts(doc, labelmap),
        "lexicon": lexical_counts(doc, easy),
    }
