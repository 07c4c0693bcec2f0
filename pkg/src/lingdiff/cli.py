"""Command-line interface.

Exit status: 0 on success, 1 for input/data errors, 2 for configuration errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import __version__

log = logging.getLogger("lingdiff")

EXIT_OK, EXIT_DATA, EXIT_CONFIG = 0, 1, 2

DEFAULTS = {
    "lexicon": None, "wordlist": None, "labelmap": None, "tagger": None, "parser": None,
    "alpha": 0.05, "wpm": 238.0, "format": "json", "seed": 0, "core_only": False, "jobs": 1,
    "endpoint": None, "model": None,
}
PATH_KEYS = ("lexicon", "wordlist", "labelmap", "tagger", "parser")


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    lexicon: Optional[str]
    wordlist: Optional[str]
    labelmap: Optional[str]
    tagger: Optional[str]
    parser: Optional[str]
    alpha: float
    wpm: float
    format: str
    seed: int
    core_only: bool
    jobs: int
    endpoint: Optional[str]
    model: Optional[str]


def read_config_file(path: str) -> dict:
    """``key = value`` lines; ``#`` starts a comment. Keys use flag names (dashes or underscores)."""
    out = {}
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc.strerror}") from None
    for lineno, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in DEFAULTS:
            raise ConfigError(f"{path}:{lineno}: expected key=value with a known key, got {line!r}")
        out[key] = value.strip()
    return out


def _coerce(key: str, value):
    if value is None or not isinstance(value, str):
        return value
    try:
        if key in ("alpha", "wpm"):
            return float(value)
        if key in ("seed", "jobs"):
            return int(value)
        if key == "core_only":
            if value.lower() in ("1", "true", "yes", "on"):
                return True
            if value.lower() in ("0", "false", "no", "off"):
                return False
            raise ValueError(value)
    except ValueError:
        raise ConfigError(f"invalid value for {key}: {value!r}") from None
    return value


def build_config(args: argparse.Namespace) -> RunConfig:
    merged = dict(DEFAULTS)
    if args.config:
        merged.update(read_config_file(args.config))
    for key in DEFAULTS:
        flag = getattr(args, key, None)
        if flag is not None:
            merged[key] = flag
    merged = {k: _coerce(k, v) for k, v in merged.items()}
    if not 0 < merged["alpha"] < 1:
        raise ConfigError("--alpha must lie strictly between 0 and 1")
    if merged["wpm"] <= 0:
        raise ConfigError("--wpm must be positive")
    if merged["format"] not in ("json", "csv", "md"):
        raise ConfigError(f"--format must be json, csv or md, not {merged['format']!r}")
    if merged["jobs"] < 1:
        raise ConfigError("--jobs must be >= 1")
    for key in PATH_KEYS:
        if merged[key] is not None and not os.path.isfile(merged[key]):
            raise ConfigError(f"--{key} file not found: {merged[key]}")
    return RunConfig(**merged)


def _resources(cfg: RunConfig):
    from .analysis import ResourcePaths, load_resources

    paths = ResourcePaths(cfg.lexicon, cfg.wordlist, cfg.labelmap, cfg.tagger, cfg.parser)
    try:
        return load_resources(paths, cfg.wpm), paths
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot load resources: {exc}") from None


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _label(paths, explicit: Optional[str]) -> str:
    if explicit:
        return explicit
    first = Path(paths[0])
    return first.name if first.is_dir() else first.stem


# -- commands ------------------------------------------------------------------

def cmd_analyze(args, cfg: RunConfig) -> int:
    from .analysis import analyze_corpus
    from .ingest import load_corpus
    from .report import render_analysis

    res, paths = _resources(cfg)
    corpus = load_corpus(args.paths, _label(args.paths, args.label))
    an = analyze_corpus(corpus, res, cfg.jobs, paths)
    _emit(render_analysis(an, cfg.format), args.out)
    return EXIT_OK


def cmd_compare(args, cfg: RunConfig) -> int:
    from .analysis import analyze_corpus, compare_corpora
    from .ingest import load_corpus
    from .report import render_comparison, render_figure_data
    from .stats import TestConfig

    res, paths = _resources(cfg)
    label_a = _label([args.corpus_a], args.label_a)
    label_b = _label([args.corpus_b], args.label_b)
    if label_a == label_b:
        label_b += "_2"
    an_a = analyze_corpus(load_corpus(args.corpus_a, label_a), res, cfg.jobs, paths)
    an_b = analyze_corpus(load_corpus(args.corpus_b, label_b), res, cfg.jobs, paths)
    rows = compare_corpora(an_a, an_b, TestConfig(alpha=cfg.alpha), core_only=cfg.core_only)
    for r in rows:
        if r.result is None:
            (log.warning if r.core else log.info)("%s/%s skipped: %s", r.level, r.feature, r.note)
    table = render_comparison(rows, cfg.format, label_a, label_b, cfg.alpha)
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        _emit(table, os.path.join(args.out_dir, f"comparison.{cfg.format}"))
        _emit(render_figure_data(rows), os.path.join(args.out_dir, "figure_data.csv"))
        if not args.no_plots:
            from .plotting import render_figures

            for path in render_figures(rows, args.out_dir, label_a, label_b):
                log.info("wrote %s", path)
    if args.out or not args.out_dir:
        _emit(table, args.out)
    return EXIT_OK


def cmd_readability(args, cfg: RunConfig) -> int:
    from .annotate import annotate_document
    from .ingest import load_corpus
    from .readability import corpus_readability
    from .report import render_readability

    res, _ = _resources(cfg)
    reports = []
    for path in args.paths:
        corpus = load_corpus(path, _label([path], None))
        docs = [annotate_document(d, res.tagger, res.parser) for d in corpus.documents]
        corpus = type(corpus)(corpus.label, docs)
        _, mean = corpus_readability(corpus, res.lexicon, res.wordlist, res.wpm)
        reports.append((corpus.label, mean))
    _emit(render_readability(reports, cfg.format), args.out)
    return EXIT_OK


def cmd_train(args, cfg: RunConfig) -> int:
    from .annotate import attachment_scores, tagging_accuracy, train_parser, train_tagger
    from .ingest import read_conllu

    if args.epochs < 1:
        raise ConfigError("--epochs must be >= 1")
    treebank = read_conllu(args.treebank)
    dev = read_conllu(args.dev) if args.dev else None
    if args.kind == "tagger":
        model = train_tagger(treebank, args.epochs, cfg.seed)
        score = f"dev token accuracy {tagging_accuracy(model, dev):.4f}" if dev else None
    else:
        model = train_parser(treebank, args.epochs, cfg.seed)
        if dev:
            uas, las = attachment_scores(model, dev)
            score = f"dev UAS {uas:.4f} LAS {las:.4f}"
        else:
            score = None
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    model.save(args.out)
    print(f"wrote {args.kind} model to {args.out}")
    if score:
        print(score)
    return EXIT_OK


def cmd_annotate(args, cfg: RunConfig) -> int:
    from .annotate import annotate_document
    from .ingest import format_conllu, load_corpus

    res, _ = _resources(cfg)
    corpus = load_corpus(args.paths, _label(args.paths, None))
    text = "".join(format_conllu(annotate_document(d, res.tagger, res.parser)) for d in corpus.documents)
    _emit(text, args.out)
    return EXIT_OK


def cmd_generate(args, cfg: RunConfig) -> int:
    from .genclient import build_matched_corpus, read_prompt_file, resolve_api_key

    endpoint = cfg.endpoint
    if not endpoint:
        raise ConfigError("--endpoint is required for generate")
    if not cfg.model:
        raise ConfigError("--model is required for generate")
    key = resolve_api_key(args.api_key)
    if args.words <= 0:
        raise ConfigError("--words must be positive")
    prompts = read_prompt_file(args.prompt_file, args.words)
    corpus = build_matched_corpus(
        prompts, args.out_dir, model_name=cfg.model, endpoint_url=endpoint, api_key=key,
        tolerance_pct=args.tolerance, temperature=args.temperature, max_retries=args.max_retries,
        jobs=cfg.jobs,
    )
    print(f"wrote {len(corpus.documents)} essays to {args.out_dir}")
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------------

def _global_flags() -> argparse.ArgumentParser:
    g = argparse.ArgumentParser(add_help=False)
    # defaults are SUPPRESS so flags given before the subcommand are not reset after it
    s = argparse.SUPPRESS
    g.add_argument("--config", default=s, help="key=value file; flags override it")
    g.add_argument("--lexicon", default=s, help="CMU-format pronunciation dictionary")
    g.add_argument("--wordlist", default=s, help="familiar-word list for easy/difficult words")
    g.add_argument("--labelmap", default=s, help="dependency label to feature-name map")
    g.add_argument("--tagger", default=s, help="tagger model file")
    g.add_argument("--parser", default=s, help="parser model file")
    g.add_argument("--alpha", type=float, default=s, help="significance level (default 0.05)")
    g.add_argument("--wpm", type=float, default=s, help="reading speed in words per minute (default 238)")
    g.add_argument("--format", choices=("json", "csv", "md"), default=s, help="output format")
    g.add_argument("--seed", type=int, default=s, help="random seed for training")
    g.add_argument("--core-only", action="store_true", default=s,
                   help="report only the core feature set (no extension rows)")
    g.add_argument("--jobs", type=int, default=s, help="worker processes for document analysis")
    g.add_argument("-v", "--verbose", action="store_true", default=s)
    return g


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    ap = argparse.ArgumentParser(prog="lingdiff", parents=[common],
                                 description="Linguistic feature comparison of two text corpora.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="feature and readability report for one corpus")
    p.add_argument("paths", nargs="+", help=".txt/.conllu files or directories")
    p.add_argument("--label", help="corpus label (default: first path name)")
    p.add_argument("-o", "--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("compare", parents=[common], help="exact binomial tests between two corpora")
    p.add_argument("corpus_a", help="first corpus (the 'human' side of prob)")
    p.add_argument("corpus_b", help="second corpus")
    p.add_argument("--label-a")
    p.add_argument("--label-b")
    p.add_argument("-o", "--out", help="output file (default: stdout)")
    p.add_argument("--out-dir", help="write the table, figure data CSV and charts here")
    p.add_argument("--no-plots", action="store_true", help="skip chart rendering in --out-dir")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("readability", parents=[common], help="readability table for one or two corpora")
    p.add_argument("paths", nargs="+", help="one or two corpora (files or directories)")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_readability)

    p = sub.add_parser("train", parents=[common], help="train a tagger or parser from CoNLL-U")
    p.add_argument("kind", choices=("tagger", "parser"))
    p.add_argument("treebank", help="training CoNLL-U file")
    p.add_argument("-o", "--out", required=True, help="model file to write")
    p.add_argument("--dev", help="held-out CoNLL-U file to score")
    p.add_argument("--epochs", type=int, default=5)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("annotate", parents=[common], help="tag and parse text into CoNLL-U")
    p.add_argument("paths", nargs="+")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_annotate)

    p = sub.add_parser("generate", parents=[common], help="build a length-matched corpus from an endpoint")
    p.add_argument("prompt_file", help="one prompt per line, optional TAB + word target")
    p.add_argument("--words", type=int, default=250, help="default word target per essay")
    p.add_argument("--endpoint", help="chat-completions URL")
    p.add_argument("--model", help="model name sent to the endpoint")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--api-key", help="overrides the OBAI_API_KEY environment variable")
    p.add_argument("--tolerance", type=float, default=20.0, help="allowed length deviation in percent")
    p.add_argument("--max-retries", type=int, default=3)
    p.add_argument("--temperature", type=float, default=1.0)
    p.set_defaults(func=cmd_generate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    for key in list(DEFAULTS) + ["config", "verbose"]:
        if not hasattr(args, key):
            setattr(args, key, None)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")

    from .annotate import ModelFormatError
    from .genclient import GenClientError, MissingApiKey
    from .phonology import LexiconError

    try:
        cfg = build_config(args)
        return args.func(args, cfg)
    except (ConfigError, MissingApiKey, ModelFormatError, LexiconError) as exc:
        print(f"lingdiff: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (GenClientError, OSError, ValueError) as exc:
        print(f"lingdiff: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
