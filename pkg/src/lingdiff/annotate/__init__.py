"""POS tagging and dependency parsing with bundled perceptron models."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from typing import Optional

from ..model import Document
from .parser import (PARSER_MAGIC, ParserModel, attachment_scores, is_projective, is_tree, parse,
                     train_parser)
from .tagger import TAGGER_MAGIC, ModelFormatError, TaggerModel, tag, tagging_accuracy, train_tagger

__all__ = [
    "PARSER_MAGIC", "TAGGER_MAGIC", "ModelFormatError", "ParserModel", "TaggerModel",
    "annotate_document", "attachment_scores", "default_parser", "default_tagger", "is_projective",
    "is_tree", "parse", "tag", "tagging_accuracy", "train_parser", "train_tagger",
]


def _bundled(name: str) -> str:
    return resources.files("lingdiff").joinpath("data").joinpath("models").joinpath(name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def default_tagger() -> TaggerModel:
    return TaggerModel.loads(_bundled("tagger.model"), "tagger.model")


@lru_cache(maxsize=None)
def default_parser() -> ParserModel:
    return ParserModel.loads(_bundled("parser.model"), "parser.model")


def annotate_document(doc: Document, tagger: Optional[TaggerModel] = None,
                      parser: Optional[ParserModel] = None) -> Document:
    """Tag and parse ``doc``, keeping any annotation it already carries."""
    if not doc.is_tagged:
        doc = tag(doc, tagger or default_tagger())
    if not doc.is_parsed:
        doc = parse(doc, parser or default_parser())
    return doc
