"""Tokenization, sentence splitting and CoNLL-U input/output."""

from __future__ import annotations

import logging
import os
import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

from .model import UPOS_TAGS, Corpus, Document, Sentence, Token

log = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike]


class EmptyDocumentError(ValueError):
    pass


class ConlluError(ValueError):
    def __init__(self, message: str, path: PathLike = "<string>", line: int = 0):
        super().__init__(f"{path}:{line}: {message}")
        self.path = str(path)
        self.line = line


@dataclass(frozen=True)
class IngestConfig:
    clitic_splitting: bool = True
    normalize_unicode: bool = True
    file_encoding: str = "utf-8"


ABBREVIATIONS = (
    "Mr.", "Mrs.", "Ms.", "Dr.", "Prof.", "Sr.", "Jr.", "St.",
    "e.g.", "i.e.", "etc.", "vs.", "U.S.", "U.K.", "a.m.", "p.m.",
)
CLITICS = ("n't", "'s", "'re", "'ve", "'ll", "'d", "'m")

_QUOTE_FOLD = str.maketrans({
    "‘": "'", "’": "'", "‚": "'", "‛": "'", "′": "'",
    "“": '"', "”": '"', "„": '"', "‟": '"', "″": '"',
})

_abbrev = "|".join(re.escape(a) for a in sorted(ABBREVIATIONS, key=len, reverse=True))
_TOKEN_RE = re.compile(
    rf"(?<![^\W_])(?:{_abbrev})"               # abbreviations keep their period
    r"|\d+(?:[.,:]\d+)+"                        # 3.5, 1,000, 10:30
    r"|[^\W_]+(?:[-'][^\W_]+)*"                 # words, incl. hyphens and inner apostrophes
    r"|\.\.\.+|--+"
    r"|\S",
)
_TERMINALS = {".", "!", "?", "...", "....", "....."}
_CLOSERS = {'"', "'", ")", "]", "}"}
_PARAGRAPH_RE = re.compile(r"\n[^\S\n]*\n")


def normalize_text(raw: str, cfg: IngestConfig = IngestConfig()) -> str:
    if cfg.normalize_unicode:
        raw = unicodedata.normalize("NFC", raw).translate(_QUOTE_FOLD)
    return raw


def _is_dropped(ch: str) -> bool:
    return unicodedata.category(ch) in ("Cc", "Cf") and not ch.isspace()


def _split_clitic(surface: str, start: int) -> list[tuple[str, int, int]]:
    low = surface.lower()
    for clitic in CLITICS:
        if low.endswith(clitic) and len(low) > len(clitic):
            cut = len(surface) - len(clitic)
            return _split_clitic(surface[:cut], start) + [(surface[cut:], start + cut, start + len(surface))]
    return [(surface, start, start + len(surface))]


def _raw_tokens(text: str, cfg: IngestConfig) -> list[tuple[str, int, int]]:
    out = []
    for m in _TOKEN_RE.finditer(text):
        surface = m.group()
        if len(surface) == 1 and _is_dropped(surface):
            continue
        if cfg.clitic_splitting and "'" in surface and surface[0].isalnum():
            out.extend(_split_clitic(surface, m.start()))
        else:
            out.append((surface, m.start(), m.end()))
    return out


def is_clitic(surface: str) -> bool:
    return surface.lower() in CLITICS


def orthographic_words(tokens: Sequence[Token]) -> Iterator[tuple[str, Token]]:
    """Yield ``(word, host)`` for each word of a sentence.

    Tokens with a letter or digit are words; a split clitic (``n't``, ``'s``,
    ...) right after a word is glued back onto it, so ``do`` + ``n't`` yields
    ``("don't", <do>)``.
    """
    word, host = "", None
    for tok in tokens:
        if host is not None and is_clitic(tok.surface):
            word += tok.surface
            continue
        if host is not None:
            yield word, host
            word, host = "", None
        if tok.is_alnum_word:
            word, host = tok.surface, tok
    if host is not None:
        yield word, host


def _boundary_after(text: str, end: int) -> bool:
    """Sentence break if whitespace then a capital letter (or opening quote + capital) follows."""
    m = re.match(r"\s+[\"'(\[]?(\S)", text[end:])
    return bool(m) and m.group(1).isupper()


def tokenize(raw: str, cfg: IngestConfig = IngestConfig()) -> list[Sentence]:
    """Split ``raw`` into sentences of unannotated tokens.

    Offsets index the normalized text (see :func:`normalize_text`). Sentences
    end at ``.``, ``!`` or ``?`` (plus any closing quotes/brackets) followed by
    whitespace and a capital letter, and at blank lines. Abbreviations from
    :data:`ABBREVIATIONS` never end a sentence.
    """
    text = normalize_text(raw, cfg)
    if not text.strip():
        raise EmptyDocumentError("empty or whitespace-only text")
    raw_toks = _raw_tokens(text, cfg)
    if not raw_toks:
        raise EmptyDocumentError("text contains no tokens")

    sentences: list[Sentence] = []
    current: list[Token] = []
    pending_break = after_terminal = False
    for surface, start, end in raw_toks:
        if current and (pending_break or _PARAGRAPH_RE.search(text, current[-1].char_end, start)):
            sentences.append(Sentence(current))
            current = []
        current.append(Token(surface, start, end))
        if surface in _TERMINALS:
            after_terminal = True
        elif surface not in _CLOSERS:
            after_terminal = False
        pending_break = after_terminal and _boundary_after(text, end)
    if current:
        sentences.append(Sentence(current))
    return sentences


def make_document(raw: str, doc_id: str, cfg: IngestConfig = IngestConfig(),
                  source_label: str = "unknown", metadata=None) -> Document:
    return Document(
        id=doc_id,
        sentences=tuple(tokenize(raw, cfg)),
        raw_text=normalize_text(raw, cfg),
        source_label=source_label,
        metadata=metadata or {},
    )


# -- CoNLL-U ---------------------------------------------------------------

def _opt(value: str):
    return None if value == "_" else value


def parse_conllu(text: str, path: PathLike = "<string>", source_label: str = "unknown") -> list[Document]:
    """Parse CoNLL-U text into documents (split on ``# newdoc`` comments)."""
    stem = Path(str(path)).stem
    docs: list[tuple[str, list[list[Token]]]] = []
    doc_id = None
    sentences: list[list[Token]] = []
    rows: list[tuple[int, list[str]]] = []
    offset = 0

    def flush_sentence():
        nonlocal rows, offset
        if not rows:
            return
        n = len(rows)
        toks = []
        for idx, (lineno, cols) in enumerate(rows, start=1):
            form, upos, xpos, head, deprel = cols[1], cols[3], cols[4], cols[6], cols[7]
            head_val = None
            if head != "_":
                try:
                    head_val = int(head)
                except ValueError:
                    raise ConlluError(f"non-integer HEAD {head!r}", path, lineno) from None
                if not 0 <= head_val <= n or head_val == idx:
                    raise ConlluError(f"HEAD {head_val} out of range", path, lineno)
                if deprel == "_":
                    raise ConlluError("HEAD given without DEPREL", path, lineno)
            if upos != "_" and upos not in UPOS_TAGS:
                raise ConlluError(f"unknown UPOS {upos!r}", path, lineno)
            if not form:
                raise ConlluError("empty FORM", path, lineno)
            toks.append(Token(form, offset, offset + len(form), _opt(upos), _opt(xpos),
                              head_val, deprel if head_val is not None else None))
            offset += len(form) + 1
        heads = [t.head for t in toks]
        if any(h is not None for h in heads):
            if None in heads:
                raise ConlluError("HEAD missing on some tokens of the sentence", path, rows[0][0])
            if heads.count(0) > 1:
                raise ConlluError("sentence has more than one root", path, rows[0][0])
        sentences.append(toks)
        rows = []

    def flush_doc():
        nonlocal sentences, offset
        flush_sentence()
        if sentences:
            docs.append((doc_id or f"{stem}-{len(docs) + 1}", sentences))
        sentences = []
        offset = 0

    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            m = re.match(r"#\s*newdoc(?:\s+id\s*=\s*(.*))?$", line.strip())
            if m:
                flush_doc()
                doc_id = (m.group(1) or "").strip() or None
            continue
        if not line.strip():
            flush_sentence()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluError(f"expected 10 tab-separated columns, got {len(cols)}", path, lineno)
        tid = cols[0]
        if "-" in tid or "." in tid:
            continue
        if not tid.isdigit() or int(tid) != len(rows) + 1:
            raise ConlluError(f"token ID {tid!r} out of sequence (expected {len(rows) + 1})", path, lineno)
        rows.append((lineno, cols))
    flush_doc()

    out = []
    for did, sents in docs:
        raw = " ".join(t.surface for s in sents for t in s)
        out.append(Document(
            id=did,
            sentences=tuple(Sentence(s) for s in sents),
            raw_text=raw,
            source_label=source_label,
            metadata={"origin": str(path), "format": "conllu"},
        ))
    return out


def read_conllu(path: PathLike, label: str | None = None, source_label: str = "unknown") -> Corpus:
    text = Path(path).read_text(encoding="utf-8")
    docs = parse_conllu(text, path, source_label)
    return Corpus(label or Path(path).stem, tuple(docs))


def format_conllu(doc: Document) -> str:
    lines = [f"# newdoc id = {doc.id}"]
    for si, sent in enumerate(doc.sentences, start=1):
        lines.append(f"# sent_id = {doc.id}-{si}")
        lines.append("# text = " + " ".join(t.surface for t in sent))
        for i, tok in enumerate(sent.tokens, start=1):
            cols = [
                str(i), tok.surface, "_", tok.upos or "_", tok.xpos or "_", "_",
                "_" if tok.head is None else str(tok.head),
                tok.deprel or "_" if tok.head is not None else "_", "_", "_",
            ]
            lines.append("\t".join(cols))
        lines.append("")
    return "\n".join(lines) + "\n"


def write_conllu(doc: Union[Document, Sequence[Document]], path: PathLike) -> None:
    docs = [doc] if isinstance(doc, Document) else list(doc)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for d in docs:
            fh.write(format_conllu(d))


# -- corpus loading ----------------------------------------------------------

def _expand(paths: Union[PathLike, Iterable[PathLike]]) -> list[Path]:
    if isinstance(paths, (str, os.PathLike)):
        paths = [paths]
    files: list[Path] = []
    for p in map(Path, paths):
        if p.is_dir():
            files.extend(sorted(f for f in p.iterdir() if f.suffix in (".txt", ".conllu") and f.is_file()))
        elif p.exists():
            files.append(p)
        else:
            raise FileNotFoundError(f"no such file or directory: {p}")
    return sorted(files, key=lambda f: (f.name, str(f)))


def load_corpus(paths: Union[PathLike, Iterable[PathLike]], label: str,
                cfg: IngestConfig = IngestConfig(), source_label: str = "unknown") -> Corpus:
    """Build a corpus from ``.txt`` and ``.conllu`` files, ordered by filename."""
    docs: list[Document] = []
    for f in _expand(paths):
        try:
            if f.suffix == ".conllu":
                docs.extend(read_conllu(f, source_label=source_label).documents)
            else:
                raw = f.read_text(encoding=cfg.file_encoding)
                docs.append(make_document(raw, f.stem, cfg, source_label, {"origin": str(f)}))
        except EmptyDocumentError as exc:
            raise EmptyDocumentError(f"{f}: {exc}") from None
        except UnicodeDecodeError as exc:
            raise ValueError(f"{f}: not valid UTF-8 ({exc.reason})") from None
    if not docs:
        raise ValueError(f"corpus {label!r} contains no documents")
    return Corpus(label, tuple(docs))
