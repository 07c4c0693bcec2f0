"""End-to-end pipeline: annotate documents, count features, score readability, compare."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .annotate import ParserModel, TaggerModel, annotate_document, default_parser, default_tagger
from .features import LabelMap, WordList, feature_counts, load_labelmap, load_wordlist
from .model import Corpus, Document, FeatureCounts, pool_counts
from .phonology import PhonLexicon, load_lexicon_cached
from .readability import DEFAULT_WPM, ReadabilityReport, document_readability, mean_report
from .registry import DEFAULT_REGISTRY, FeatureRegistry
from .stats import BinomialResult, FeatureSkipped, TestConfig, compare_feature


def data_path(*parts: str) -> str:
    ref = resources.files("lingdiff").joinpath("data")
    for part in parts:
        ref = ref.joinpath(part)
    return os.fspath(ref)


@dataclass(frozen=True)
class ResourcePaths:
    """File locations for everything the pipeline loads; ``None`` means the bundled copy."""

    lexicon: Optional[str] = None
    wordlist: Optional[str] = None
    labelmap: Optional[str] = None
    tagger: Optional[str] = None
    parser: Optional[str] = None


@dataclass(frozen=True)
class Resources:
    lexicon: PhonLexicon
    wordlist: WordList
    labelmap: LabelMap
    tagger: TaggerModel
    parser: ParserModel
    wpm: float = DEFAULT_WPM


def load_resources(paths: ResourcePaths = ResourcePaths(), wpm: float = DEFAULT_WPM) -> Resources:
    lex = load_lexicon_cached(os.fspath(paths.lexicon or data_path("cmudict.txt.gz")))
    easy = load_wordlist(paths.wordlist or data_path("easy_words.txt"), "easy_words")
    labelmap = load_labelmap(paths.labelmap or data_path("ud_labelmap.tsv"))
    tagger = TaggerModel.load(paths.tagger) if paths.tagger else default_tagger()
    parser = ParserModel.load(paths.parser) if paths.parser else default_parser()
    return Resources(lex, easy, labelmap, tagger, parser, wpm)


@dataclass(frozen=True)
class DocumentAnalysis:
    id: str
    document: Document
    counts: dict[str, FeatureCounts]
    readability: ReadabilityReport


@dataclass(frozen=True)
class CorpusAnalysis:
    label: str
    documents: tuple[DocumentAnalysis, ...]
    pooled: dict[str, FeatureCounts]
    readability_mean: ReadabilityReport


def analyze_document(doc: Document, res: Resources) -> DocumentAnalysis:
    annotated = annotate_document(doc, res.tagger, res.parser)
    counts = feature_counts(annotated, res.lexicon, res.wordlist, res.labelmap)
    report = document_readability(annotated, res.lexicon, res.wordlist, res.wpm)
    return DocumentAnalysis(doc.id, annotated, counts, report)


_worker_res: Optional[Resources] = None


def _init_worker(paths: ResourcePaths, wpm: float):
    global _worker_res
    _worker_res = load_resources(paths, wpm)


def _analyze_in_worker(doc: Document) -> DocumentAnalysis:
    return analyze_document(doc, _worker_res)


def analyze_corpus(corpus: Corpus, res: Resources, jobs: int = 1,
                   paths: Optional[ResourcePaths] = None) -> CorpusAnalysis:
    """Per-document analysis plus counts pooled over the corpus.

    With ``jobs > 1`` documents are processed in worker processes that load
    their own resources from ``paths``; results keep the corpus order.
    """
    if not corpus.documents:
        raise ValueError(f"corpus {corpus.label!r} is empty")
    if jobs > 1 and len(corpus.documents) > 1:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                                 initargs=(paths or ResourcePaths(), res.wpm)) as pool:
            docs = tuple(pool.map(_analyze_in_worker, corpus.documents))
    else:
        docs = tuple(analyze_document(d, res) for d in corpus.documents)
    levels = docs[0].counts.keys()
    pooled = {lvl: pool_counts(d.counts[lvl] for d in docs) for lvl in levels}
    return CorpusAnalysis(corpus.label, docs, pooled, mean_report(d.readability for d in docs))


@dataclass(frozen=True)
class ComparisonRow:
    level: str
    feature: str
    display_name: str
    core: bool
    count_a: int
    count_b: int
    result: Optional[BinomialResult]
    note: str = ""


def compare_corpora(a: CorpusAnalysis, b: CorpusAnalysis, cfg: TestConfig = TestConfig(),
                    registry: FeatureRegistry = DEFAULT_REGISTRY,
                    core_only: bool = False) -> list[ComparisonRow]:
    """One exact test per registered count feature, in registry order.

    Corpus ``a`` plays the role of the human side: ``prob`` is its share.
    """
    present = {lvl: set(a.pooled[lvl].counts) | set(b.pooled[lvl].counts) for lvl in a.pooled}
    rows = []
    for entry in registry.ordered(present, core_only):
        if not entry.compared:
            continue
        ka = a.pooled[entry.level].get(entry.name) if entry.level in a.pooled else 0
        kb = b.pooled[entry.level].get(entry.name) if entry.level in b.pooled else 0
        try:
            result = compare_feature(entry.name, ka, kb, cfg, entry.level)
            note = ""
        except FeatureSkipped:
            result, note = None, "no occurrences in either corpus"
        rows.append(ComparisonRow(entry.level, entry.name, entry.display_name, entry.core,
                                  ka, kb, result, note))
    return rows
