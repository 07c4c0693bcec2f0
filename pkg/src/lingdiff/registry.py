"""Ordered registry of reported features, their levels and display names."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

LEVELS = ("phonology", "morphology", "syntax", "lexicon")


@dataclass(frozen=True)
class FeatureEntry:
    """One reported feature.

    ``core`` marks the standard inventory (e.g. the five manners and five
    places, the common POS rows); everything else is an extension row.
    ``compared`` is false for descriptive counts that are never tested.
    """

    name: str
    level: str
    display_name: str
    core: bool
    compared: bool = True

    @property
    def key(self) -> tuple[str, str]:
        return self.level, self.name


def _entries(level: str, core: Iterable[str], extra: Iterable[str] = (), descriptive: Iterable[str] = ()):
    out = []
    for name in core:
        out.append(FeatureEntry(name, level, name.replace("_", " "), True))
    for name in extra:
        out.append(FeatureEntry(name, level, name.replace("_", " "), False))
    for name in descriptive:
        out.append(FeatureEntry(name, level, name.replace("_", " "), False, compared=False))
    return out


UD_RELATION_EXTENSIONS = (
    "acl", "acl:relcl", "advcl", "appos", "aux", "aux:pass", "case", "cc", "ccomp", "compound",
    "cop", "csubj", "dep", "discourse", "expl", "fixed", "flat", "iobj", "mark", "nmod",
    "nmod:poss", "nummod", "obl", "parataxis", "punct", "xcomp",
)

DEFAULT_ENTRIES = (
    _entries("phonology",
             ["approximant", "fricative", "lateral", "nasal", "plosive", "alveolar", "bilabial",
              "dental", "labiodental", "postalveolar", "voiced", "voiceless", "primary_stress",
              "secondary_stress"],
             ["affricate", "palatal", "velar", "glottal", "syllables", "vowel_phonemes"])
    + _entries("morphology",
               ["adjective", "adposition", "adverb", "auxiliary", "coordinating_conjunction",
                "noun", "particle", "pronoun", "subordinating_conjunction", "verb"],
               ["determiner", "interjection", "numeral", "proper_noun", "symbol", "other",
                "punctuation"])
    + _entries("syntax",
               ["adjectival_modifier", "adverbial_modifier", "conjunct", "determiner",
                "direct_object", "nominal_subject", "object_preposition",
                "prepositional_modifier", "root"],
               UD_RELATION_EXTENSIONS)
    + _entries("lexicon",
               ["easy_word", "difficult_word", "content_word", "function_word"],
               descriptive=["types", "hapax_legomena"])
)


class FeatureRegistry:
    """Fixed report order; features seen in data but not registered go last, sorted."""

    def __init__(self, entries: Iterable[FeatureEntry] = DEFAULT_ENTRIES):
        self.entries = tuple(entries)
        keys = [e.key for e in self.entries]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate feature in registry")
        self._by_key = {e.key: e for e in self.entries}

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, level: str, name: str) -> FeatureEntry:
        entry = self._by_key.get((level, name))
        if entry is None:
            entry = FeatureEntry(name, level, name.replace("_", " "), False)
        return entry

    def ordered(self, counts_by_level: Mapping[str, Iterable[str]], core_only: bool = False) -> list[FeatureEntry]:
        """Entries to report given the feature names present per level."""
        out = []
        for level in LEVELS:
            present = set(counts_by_level.get(level, ()))
            registered = [e for e in self.entries if e.level == level]
            out.extend(e for e in registered if e.name in present or e.core)
            known = {e.name for e in registered}
            out.extend(self.get(level, name) for name in sorted(present - known))
        if core_only:
            out = [e for e in out if e.core]
        return out


DEFAULT_REGISTRY = FeatureRegistry()
