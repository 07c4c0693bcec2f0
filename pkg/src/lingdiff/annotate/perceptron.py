"""Multiclass averaged perceptron shared by the tagger and the parser."""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Iterable, Optional, Sequence


class ModelFormatError(ValueError):
    """A model file is malformed or of the wrong kind."""


def round_weight(w: float) -> float:
    # 6 significant digits: what the model files store, so in-memory == reloaded
    return float(f"{w:.6g}")


def best_class(weights: dict, features: Iterable[str], candidates: Sequence[str]) -> str:
    """Highest-scoring candidate; equal scores go to the lexicographically smallest name."""
    scores: dict[str, float] = defaultdict(float)
    for feat in features:
        row = weights.get(feat)
        if row:
            for cls, w in row.items():
                scores[cls] += w
    return min(candidates, key=lambda c: (-scores.get(c, 0.0), c))


class AveragedPerceptron:
    """Perceptron whose final weights are the average over every update step.

    Averaging is done lazily: each weight remembers the step at which it last
    changed, so only the touched weights are visited per update.
    """

    def __init__(self, classes: Sequence[str]):
        self.classes = tuple(sorted(set(classes)))
        self.weights: dict[str, dict[str, float]] = {}
        self._totals: dict[tuple[str, str], float] = defaultdict(float)
        self._stamps: dict[tuple[str, str], int] = defaultdict(int)
        self.steps = 0

    def predict(self, features: Sequence[str], candidates: Optional[Sequence[str]] = None) -> str:
        return best_class(self.weights, features, candidates or self.classes)

    def _bump(self, feat: str, cls: str, delta: float):
        row = self.weights.setdefault(feat, {})
        w = row.get(cls, 0.0)
        key = (feat, cls)
        self._totals[key] += (self.steps - self._stamps[key]) * w
        self._stamps[key] = self.steps
        row[cls] = w + delta

    def update(self, truth: str, guess: str, features: Sequence[str]):
        if truth != guess:
            for feat in features:
                self._bump(feat, truth, 1.0)
                self._bump(feat, guess, -1.0)
        self.steps += 1

    def averaged(self) -> dict[str, dict[str, float]]:
        out: dict[str, dict[str, float]] = {}
        steps = max(self.steps, 1)
        for feat, row in self.weights.items():
            for cls, w in row.items():
                key = (feat, cls)
                total = self._totals[key] + (self.steps - self._stamps[key]) * w
                avg = round_weight(total / steps)
                if avg != 0.0:
                    out.setdefault(feat, {})[cls] = avg
        return out


def dump_weights(weights: dict[str, dict[str, float]]) -> list[str]:
    lines = []
    for feat in sorted(weights):
        row = weights[feat]
        for cls in sorted(row):
            lines.append(f"{feat}\t{cls}\t{row[cls]!r}")
    return lines


def parse_weights(lines: Iterable[str], source: str) -> dict[str, dict[str, float]]:
    weights: dict[str, dict[str, float]] = {}
    for lineno, line in lines:
        parts = line.split("\t")
        if len(parts) != 3:
            raise ModelFormatError(f"{source}:{lineno}: malformed weight line")
        feat, cls, value = parts
        try:
            w = float(value)
        except ValueError:
            raise ModelFormatError(f"{source}:{lineno}: weight {value!r} is not a number") from None
        if not math.isfinite(w):
            raise ModelFormatError(f"{source}:{lineno}: non-finite weight")
        weights.setdefault(feat, {})[cls] = w
    return weights
