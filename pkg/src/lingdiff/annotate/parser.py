"""Greedy arc-standard dependency parser with a static oracle."""

from __future__ import annotations

import logging
import os
import random
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from ..model import Corpus, Document, Sentence
from .perceptron import AveragedPerceptron, best_class, dump_weights, parse_weights
from .tagger import ModelFormatError

log = logging.getLogger(__name__)

PARSER_MAGIC = "OBAI-PARSER/1"
SHIFT = "SHIFT"
LEFT = "LEFT-ARC:"
RIGHT = "RIGHT-ARC:"
ROOT_LABEL = "root"


def is_projective(heads: Sequence[int]) -> bool:
    """``heads[i]`` is the head of token ``i + 1`` (0 = root)."""
    arcs = [(h, d) for d, h in enumerate(heads, start=1)]
    for h1, d1 in arcs:
        lo1, hi1 = sorted((h1, d1))
        for h2, d2 in arcs:
            lo2, hi2 = sorted((h2, d2))
            if lo1 < lo2 < hi1 < hi2:
                return False
    return True


def is_tree(heads: Sequence[int]) -> bool:
    """Single root, every head in range, and no cycles."""
    n = len(heads)
    if sum(1 for h in heads if h == 0) != 1:
        return False
    for d, h in enumerate(heads, start=1):
        if not 0 <= h <= n or h == d:
            return False
    for start in range(1, n + 1):
        seen = set()
        node = start
        while node != 0:
            if node in seen:
                return False
            seen.add(node)
            node = heads[node - 1]
    return True


class Config:
    """Parser state: stack of token ids (0 = artificial root), buffer pointer and arcs."""

    __slots__ = ("words", "tags", "n", "stack", "b", "heads", "labels", "lefts", "rights")

    def __init__(self, words: Sequence[str], tags: Sequence[str]):
        self.words = ["<ROOT>"] + [w.lower() for w in words]
        self.tags = ["ROOT"] + list(tags)
        self.n = len(words)
        self.stack = [0]
        self.b = 1
        self.heads = [None] * (self.n + 1)
        self.labels = [None] * (self.n + 1)
        self.lefts = [[] for _ in range(self.n + 1)]
        self.rights = [[] for _ in range(self.n + 1)]

    @property
    def terminal(self) -> bool:
        return self.b > self.n and len(self.stack) == 1

    def legal(self, labels: Sequence[str]) -> list[str]:
        moves = []
        if self.b <= self.n:
            moves.append(SHIFT)
        if len(self.stack) >= 2:
            s1 = self.stack[-2]
            if s1 != 0:
                moves.extend(LEFT + lab for lab in labels if lab != ROOT_LABEL)
                moves.extend(RIGHT + lab for lab in labels if lab != ROOT_LABEL)
            elif self.b > self.n:
                moves.append(RIGHT + ROOT_LABEL)
        return moves

    def apply(self, move: str):
        if move == SHIFT:
            self.stack.append(self.b)
            self.b += 1
            return
        s0 = self.stack.pop()
        s1 = self.stack.pop()
        if move.startswith(LEFT):
            head, dep, label = s0, s1, move[len(LEFT):]
            self.lefts[head].append(dep)
        else:
            head, dep, label = s1, s0, move[len(RIGHT):]
            self.rights[head].append(dep)
        self.heads[dep] = head
        self.labels[dep] = label
        self.stack.append(head)

    def features(self) -> list[str]:
        st = self.stack
        s0 = st[-1] if st else None
        s1 = st[-2] if len(st) >= 2 else None
        b0 = self.b if self.b <= self.n else None

        def w(i):
            return "<NONE>" if i is None else self.words[i]

        def t(i):
            return "<NONE>" if i is None else self.tags[i]

        def lc(i):
            return self.labels[self.lefts[i][0]] if i is not None and self.lefts[i] else "-"

        def rc(i):
            return self.labels[self.rights[i][-1]] if i is not None and self.rights[i] else "-"

        s0w, s0t, s1w, s1t, b0w, b0t = w(s0), t(s0), w(s1), t(s1), w(b0), t(b0)
        dist = "-" if s0 is None or s1 is None else str(min(s0 - s1, 5))
        nl = 0 if s0 is None else len(self.lefts[s0])
        nr = 0 if s0 is None else len(self.rights[s0])
        return [
            "bias",
            "s0w=" + s0w, "s0t=" + s0t, "s0wt=" + s0w + "/" + s0t,
            "s1w=" + s1w, "s1t=" + s1t, "s1wt=" + s1w + "/" + s1t,
            "b0w=" + b0w, "b0t=" + b0t, "b0wt=" + b0w + "/" + b0t,
            "s0t_s1t=" + s0t + "/" + s1t,
            "s0t_b0t=" + s0t + "/" + b0t,
            "s1t_s0t_b0t=" + s1t + "/" + s0t + "/" + b0t,
            "s0w_s1t=" + s0w + "/" + s1t,
            "s1w_s0t=" + s1w + "/" + s0t,
            "s0w_s1w=" + s0w + "/" + s1w,
            "s0t_b0w=" + s0t + "/" + b0w,
            "s0w_b0t=" + s0w + "/" + b0t,
            "s0lc=" + lc(s0), "s0rc=" + rc(s0), "s1lc=" + lc(s1), "s1rc=" + rc(s1),
            "s1t_s0t_s0lc=" + s1t + "/" + s0t + "/" + lc(s0),
            "s1t_s1rc_s0t=" + s1t + "/" + rc(s1) + "/" + s0t,
            "dist_s0t_s1t=" + dist + "/" + s0t + "/" + s1t,
            "val_s0t=" + f"{nl}/{nr}/" + s0t,
            "b0_empty=" + str(b0 is None),
        ]


def static_oracle(cfg: Config, gold_heads: Sequence[int], gold_labels: Sequence[str],
                  attached: list[int], n_children: list[int]) -> Optional[str]:
    """Gold transition for ``cfg``; ``None`` if the gold tree is unreachable."""
    if len(cfg.stack) >= 2:
        s0, s1 = cfg.stack[-1], cfg.stack[-2]
        if s1 != 0 and gold_heads[s1] == s0:
            return LEFT + gold_labels[s1]
        if gold_heads[s0] == s1 and attached[s0] == n_children[s0]:
            if s1 == 0 and cfg.b <= cfg.n:
                return SHIFT
            return RIGHT + (ROOT_LABEL if s1 == 0 else gold_labels[s0])
    if cfg.b <= cfg.n:
        return SHIFT
    return None


@dataclass
class ParserModel:
    weights: dict
    label_set: list
    version: int = 1

    def parse_sentence(self, words: Sequence[str], tags: Sequence[str]) -> tuple[list[int], list[str]]:
        cfg = Config(words, tags)
        while not cfg.terminal:
            legal = cfg.legal(self.label_set)
            cfg.apply(best_class(self.weights, cfg.features(), legal))
        return cfg.heads[1:], cfg.labels[1:]

    def dumps(self) -> str:
        lines = [PARSER_MAGIC, "labels\t" + "\t".join(self.label_set)]
        lines += dump_weights(self.weights)
        return "\n".join(lines) + "\n"

    def save(self, path: Union[str, os.PathLike]):
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.dumps())

    @classmethod
    def loads(cls, text: str, source: str = "<parser>") -> "ParserModel":
        lines = text.split("\n")
        if not lines or lines[0].strip() != PARSER_MAGIC:
            raise ModelFormatError(f"{source}: not a {PARSER_MAGIC} model file")
        if len(lines) < 2 or not lines[1].startswith("labels\t"):
            raise ModelFormatError(f"{source}: missing labels line")
        labels = lines[1].split("\t")[1:]
        if not labels:
            raise ModelFormatError(f"{source}: empty label set")
        weights = parse_weights(((n, ln) for n, ln in enumerate(lines[2:], start=3) if ln), source)
        return cls(weights, labels)

    @classmethod
    def load(cls, path: Union[str, os.PathLike]) -> "ParserModel":
        with open(path, encoding="utf-8") as fh:
            return cls.loads(fh.read(), os.fspath(path))


def _gold(sent: Sentence):
    heads = [0] + [t.head for t in sent.tokens]
    labels = [None] + [t.deprel for t in sent.tokens]
    return heads, labels


def train_parser(treebank: Corpus, epochs: int = 5, seed: int = 0) -> ParserModel:
    """Train on projective gold trees; non-projective sentences are skipped."""
    if epochs < 1:
        raise ValueError("epochs must be >= 1")
    sents = []
    skipped = 0
    for doc in treebank.documents:
        for s in doc.sentences:
            if not s.is_tagged or not s.is_parsed:
                raise ValueError("parser training needs gold UPOS, HEAD and DEPREL on every token")
            if is_tree(s.heads) and is_projective(s.heads):
                sents.append(s)
            else:
                skipped += 1
    if skipped:
        log.info("skipped %d non-projective sentences", skipped)
    if not sents:
        raise ValueError("no projective sentences to train on")
    labels = sorted({t.deprel for s in sents for t in s.tokens} | {ROOT_LABEL})
    moves = [SHIFT] + [LEFT + lab for lab in labels] + [RIGHT + lab for lab in labels]
    model = AveragedPerceptron(moves)
    rng = random.Random(seed)
    order = list(range(len(sents)))
    for epoch in range(epochs):
        rng.shuffle(order)
        correct = total = 0
        for idx in order:
            sent = sents[idx]
            gold_heads, gold_labels = _gold(sent)
            n_children = [0] * (len(sent) + 1)
            for h in gold_heads[1:]:
                n_children[h] += 1
            attached = [0] * (len(sent) + 1)
            cfg = Config([t.surface for t in sent.tokens], [t.upos for t in sent.tokens])
            while not cfg.terminal:
                gold = static_oracle(cfg, gold_heads, gold_labels, attached, n_children)
                feats = cfg.features()
                guess = model.predict(feats, cfg.legal(labels))
                model.update(gold, guess, feats)
                correct += guess == gold
                total += 1
                if gold != SHIFT:
                    attached[cfg.stack[-1] if gold.startswith(LEFT) else cfg.stack[-2]] += 1
                cfg.apply(gold)
        log.info("parser epoch %d: transition accuracy %.4f", epoch + 1, correct / total)
    return ParserModel(model.averaged(), labels)


def parse(doc: Document, model: ParserModel) -> Document:
    """Attach a single-rooted projective tree to every sentence of a tagged document."""
    if not doc.is_tagged:
        raise ValueError(f"document {doc.id!r} must be tagged before parsing")
    new_sents = []
    for sent in doc.sentences:
        heads, labels = model.parse_sentence([t.surface for t in sent.tokens], [t.upos for t in sent.tokens])
        new_sents.append(Sentence(
            t.with_annotation(head=h, deprel=lab) for t, h, lab in zip(sent.tokens, heads, labels)
        ))
    return doc.with_sentences(new_sents)


def attachment_scores(model: ParserModel, gold: Corpus, tagger=None) -> tuple[float, float]:
    """Unlabeled and labeled attachment scores against gold trees.

    With ``tagger`` the parser sees predicted tags instead of the gold ones.
    """
    from .tagger import tag

    uas = las = total = 0
    for doc in gold.documents:
        predicted = parse(tag(doc, tagger) if tagger is not None else doc, model)
        for g, p in zip(doc.tokens(), predicted.tokens()):
            total += 1
            if g.head == p.head:
                uas += 1
                las += g.deprel == p.deprel
    return (uas / total, las / total) if total else (0.0, 0.0)
