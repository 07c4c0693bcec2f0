"""Greedy left-to-right POS tagger trained as an averaged perceptron."""

from __future__ import annotations

import logging
import os
import random
from dataclasses import dataclass
from typing import Union

from ..model import Corpus, Document, Sentence
from .perceptron import AveragedPerceptron, ModelFormatError, best_class, dump_weights, parse_weights

log = logging.getLogger(__name__)

TAGGER_MAGIC = "OBAI-TAGGER/1"
START = ("-START-", "-START2-")


def word_shape(word: str) -> str:
    """Character-class signature with runs collapsed, e.g. ``Xx``, ``d.d``, ``x-x``."""
    out: list[str] = []
    for ch in word:
        c = "X" if ch.isupper() else "x" if ch.isalpha() else "d" if ch.isdigit() else ch
        if not out or out[-1] != c:
            out.append(c)
    return "".join(out)[:6]


def static_features(words: list[str], i: int) -> list[str]:
    w = words[i]
    low = w.lower()
    prev_w = words[i - 1].lower() if i > 0 else "-BOS-"
    next_w = words[i + 1].lower() if i + 1 < len(words) else "-EOS-"
    return [
        "bias",
        "w=" + w,
        "lw=" + low,
        "s1=" + low[-1:],
        "s2=" + low[-2:],
        "s3=" + low[-3:],
        "p1=" + w[:1],
        "pw=" + prev_w,
        "nw=" + next_w,
        "shape=" + word_shape(w),
    ]


def context_features(prev: str, prev2: str) -> list[str]:
    return ["pt=" + prev, "pt2=" + prev2 + "+" + prev]


@dataclass
class TaggerModel:
    weights: dict
    tagset: list
    version: int = 1

    @property
    def uses_xpos(self) -> bool:
        return any("|" in t for t in self.tagset)

    def tag_words(self, words: list[str]) -> list[str]:
        prev, prev2 = START
        out = []
        for i in range(len(words)):
            feats = static_features(words, i) + context_features(prev, prev2)
            guess = best_class(self.weights, feats, self.tagset)
            out.append(guess)
            prev2, prev = prev, guess
        return out

    def dumps(self) -> str:
        lines = [TAGGER_MAGIC, "tagset\t" + "\t".join(self.tagset)]
        lines += dump_weights(self.weights)
        return "\n".join(lines) + "\n"

    def save(self, path: Union[str, os.PathLike]):
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.dumps())

    @classmethod
    def loads(cls, text: str, source: str = "<tagger>") -> "TaggerModel":
        lines = text.split("\n")
        if not lines or lines[0].strip() != TAGGER_MAGIC:
            raise ModelFormatError(f"{source}: not a {TAGGER_MAGIC} model file")
        if len(lines) < 2 or not lines[1].startswith("tagset\t"):
            raise ModelFormatError(f"{source}: missing tagset line")
        tagset = lines[1].split("\t")[1:]
        if not tagset:
            raise ModelFormatError(f"{source}: empty tagset")
        weights = parse_weights(((n, ln) for n, ln in enumerate(lines[2:], start=3) if ln), source)
        return cls(weights, tagset)

    @classmethod
    def load(cls, path: Union[str, os.PathLike]) -> "TaggerModel":
        with open(path, encoding="utf-8") as fh:
            return cls.loads(fh.read(), os.fspath(path))


def _gold_class(tok, use_xpos: bool) -> str:
    return f"{tok.upos}|{tok.xpos}" if use_xpos else tok.upos


def _training_sentences(treebank: Corpus) -> list[Sentence]:
    sents = [s for d in treebank.documents for s in d.sentences]
    if not sents:
        raise ValueError("treebank has no sentences")
    for s in sents:
        for t in s.tokens:
            if t.upos is None:
                raise ValueError(f"token {t.surface!r} lacks a gold UPOS tag")
    return sents


def train_tagger(treebank: Corpus, epochs: int = 5, seed: int = 0) -> TaggerModel:
    """Train on gold UPOS (paired with XPOS when every token carries one)."""
    if epochs < 1:
        raise ValueError("epochs must be >= 1")
    sents = _training_sentences(treebank)
    use_xpos = all(t.xpos is not None for s in sents for t in s.tokens)
    data = []
    for s in sents:
        words = [t.surface for t in s.tokens]
        data.append((
            [static_features(words, i) for i in range(len(words))],
            [_gold_class(t, use_xpos) for t in s.tokens],
        ))
    model = AveragedPerceptron({c for _, gold in data for c in gold})
    rng = random.Random(seed)
    order = list(range(len(data)))
    for epoch in range(epochs):
        rng.shuffle(order)
        correct = total = 0
        for idx in order:
            feats_seq, gold = data[idx]
            prev, prev2 = START
            for feats, truth in zip(feats_seq, gold):
                feats = feats + context_features(prev, prev2)
                guess = model.predict(feats)
                model.update(truth, guess, feats)
                correct += guess == truth
                total += 1
                prev2, prev = prev, guess
        log.info("tagger epoch %d: train accuracy %.4f", epoch + 1, correct / total)
    return TaggerModel(model.averaged(), list(model.classes))


def tag(doc: Document, model: TaggerModel) -> Document:
    """Return a copy of ``doc`` with UPOS (and XPOS, if modelled) on every token."""
    new_sents = []
    for sent in doc.sentences:
        classes = model.tag_words([t.surface for t in sent.tokens])
        toks = []
        for tok, cls in zip(sent.tokens, classes):
            upos, _, xpos = cls.partition("|")
            toks.append(tok.with_annotation(upos=upos, xpos=xpos or None))
        new_sents.append(Sentence(toks))
    return doc.with_sentences(new_sents)


def tagging_accuracy(model: TaggerModel, gold: Corpus) -> float:
    correct = total = 0
    for doc in gold.documents:
        predicted = tag(doc, model)
        for g, p in zip(doc.tokens(), predicted.tokens()):
            correct += g.upos == p.upos
            total += 1
    return correct / total if total else 0.0
