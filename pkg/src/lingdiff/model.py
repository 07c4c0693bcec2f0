"""Immutable corpus data model: tokens, sentences, documents and feature counts."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional

UPOS_TAGS = (
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
)
SOURCE_LABELS = ("human", "ai", "unknown")


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    char_start: int
    char_end: int
    upos: Optional[str] = None
    xpos: Optional[str] = None
    head: Optional[int] = None
    deprel: Optional[str] = None

    def __post_init__(self):
        if not self.surface:
            raise ValueError("empty token surface")
        if not 0 <= self.char_start < self.char_end:
            raise ValueError(f"bad offsets {self.char_start}:{self.char_end} for {self.surface!r}")
        if self.upos is not None and self.upos not in UPOS_TAGS:
            raise ValueError(f"unknown UPOS tag {self.upos!r}")
        if self.head is not None and self.deprel is None:
            raise ValueError(f"token {self.surface!r} has a head but no deprel")

    @property
    def lower(self) -> str:
        return self.surface.lower()

    @property
    def is_word(self) -> bool:
        return any(ch.isalpha() for ch in self.surface)

    @property
    def is_alnum_word(self) -> bool:
        """True for tokens readability formulas count as words (any letter or digit)."""
        return any(ch.isalnum() for ch in self.surface)

    def with_annotation(self, **changes) -> "Token":
        return replace(self, **changes)


@dataclass(frozen=True, slots=True)
class Sentence:
    tokens: tuple[Token, ...]

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not self.tokens:
            raise ValueError("sentence must contain at least one token")
        prev = -1
        for tok in self.tokens:
            if tok.char_start < prev:
                raise ValueError("token offsets must be non-decreasing")
            prev = tok.char_start
        if any(t.head is not None for t in self.tokens):
            n = len(self.tokens)
            roots = 0
            for i, tok in enumerate(self.tokens, start=1):
                if tok.head is None:
                    raise ValueError("partial dependency annotation in sentence")
                if not 0 <= tok.head <= n or tok.head == i:
                    raise ValueError(f"head {tok.head} out of range for token {i}")
                roots += tok.head == 0
            if roots > 1:
                raise ValueError("sentence has more than one root")

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    @property
    def is_tagged(self) -> bool:
        return all(t.upos is not None for t in self.tokens)

    @property
    def is_parsed(self) -> bool:
        return all(t.head is not None for t in self.tokens)

    @property
    def heads(self) -> list[int]:
        return [t.head for t in self.tokens]


@dataclass(frozen=True)
class Document:
    id: str
    sentences: tuple[Sentence, ...]
    raw_text: str = ""
    source_label: str = "unknown"
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        object.__setattr__(self, "metadata", MappingProxyType(dict(self.metadata)))
        if self.source_label not in SOURCE_LABELS:
            raise ValueError(f"source_label must be one of {SOURCE_LABELS}")
        if self.raw_text:
            for tok in self.tokens():
                if tok.char_end > len(self.raw_text):
                    raise ValueError(f"token {tok.surface!r} lies outside raw_text")

    def __reduce__(self):
        # MappingProxyType does not pickle; rebuild from a plain dict
        return (type(self), (self.id, self.sentences, self.raw_text, self.source_label, dict(self.metadata)))

    def tokens(self) -> Iterator[Token]:
        for sent in self.sentences:
            yield from sent.tokens

    @property
    def is_tagged(self) -> bool:
        return bool(self.sentences) and all(s.is_tagged for s in self.sentences)

    @property
    def is_parsed(self) -> bool:
        return bool(self.sentences) and all(s.is_parsed for s in self.sentences)

    def with_sentences(self, sentences: Iterable[Sentence]) -> "Document":
        return replace(self, sentences=tuple(sentences))


@dataclass(frozen=True)
class Corpus:
    label: str
    documents: tuple[Document, ...]

    def __post_init__(self):
        object.__setattr__(self, "documents", tuple(self.documents))

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)


@dataclass(frozen=True)
class FeatureCounts:
    """Named non-negative counts plus the totals they are measured against."""

    counts: Mapping[str, int] = field(default_factory=dict)
    bases: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for kind in ("counts", "bases"):
            values = dict(getattr(self, kind))
            for key, value in values.items():
                if int(value) != value or value < 0:
                    raise ValueError(f"{kind}[{key!r}] must be a non-negative integer, got {value!r}")
            object.__setattr__(self, kind, MappingProxyType({k: int(v) for k, v in values.items()}))

    def __reduce__(self):
        return (type(self), (dict(self.counts), dict(self.bases)))

    def __add__(self, other: "FeatureCounts") -> "FeatureCounts":
        return merge_counts(self, other)

    def get(self, name: str) -> int:
        return self.counts.get(name, 0)

    def to_dict(self) -> dict:
        return {"counts": dict(self.counts), "bases": dict(self.bases)}


def _add_maps(a: Mapping[str, int], b: Mapping[str, int]) -> dict[str, int]:
    out = dict(a)
    for key, value in b.items():
        out[key] = out.get(key, 0) + value
    return out


def merge_counts(a: FeatureCounts, b: FeatureCounts) -> FeatureCounts:
    """Pointwise sum of counts and bases; missing keys count as zero."""
    return FeatureCounts(_add_maps(a.counts, b.counts), _add_maps(a.bases, b.bases))


def pool_counts(items: Iterable[FeatureCounts]) -> FeatureCounts:
    total = FeatureCounts()
    for fc in items:
        total = merge_counts(total, fc)
    return total
