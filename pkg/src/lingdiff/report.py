"""Render analysis, comparison and readability results as JSON, CSV or Markdown."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import fields
from typing import Sequence

from .analysis import ComparisonRow, CorpusAnalysis
from .readability import READABILITY_LABELS, ReadabilityReport
from .registry import LEVELS

FORMATS = ("json", "csv", "md")
COMPARE_COLUMNS = ("level", "feature", "p_value", "ci_low", "ci_high", "prob", "cohens_h",
                   "effect_label", "significant")
FIGURE_COLUMNS = ("feature", "count_A", "count_B", "level")


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _md_table(header: Sequence[str], rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _by_level(counts: dict, attr: str) -> dict:
    return {lvl: dict(getattr(counts[lvl], attr)) for lvl in LEVELS if lvl in counts}


# -- analyze -----------------------------------------------------------------

def analysis_dict(an: CorpusAnalysis) -> dict:
    return {
        "corpus": an.label,
        "documents": [
            {
                "id": d.id,
                "counts": _by_level(d.counts, "counts"),
                "bases": _by_level(d.counts, "bases"),
                "readability": d.readability.to_dict(),
            }
            for d in an.documents
        ],
        "pooled": {"counts": _by_level(an.pooled, "counts"), "bases": _by_level(an.pooled, "bases")},
        "readability_mean": an.readability_mean.to_dict(),
    }


def render_analysis(an: CorpusAnalysis, fmt: str) -> str:
    if fmt == "json":
        return _json(analysis_dict(an))
    if fmt == "csv":
        rows = []
        for d in an.documents:
            for lvl in LEVELS:
                fc = d.counts.get(lvl)
                if fc is None:
                    continue
                rows += [(d.id, lvl, name, value) for name, value in fc.counts.items()]
                rows += [(d.id, lvl, name, value) for name, value in fc.bases.items()]
            rows += [(d.id, "readability", name, value) for name, value in d.readability.to_dict().items()]
        return _csv(("document", "level", "feature", "value"), rows)
    if fmt == "md":
        parts = [f"# Corpus `{an.label}` ({len(an.documents)} documents)\n"]
        for lvl in LEVELS:
            if lvl not in an.pooled:
                continue
            fc = an.pooled[lvl]
            parts.append(f"\n## {lvl}\n\n")
            parts.append(_md_table(("feature", "count"), fc.counts.items()))
            parts.append("\n" + _md_table(("basis", "total"), fc.bases.items()))
        parts.append("\n## readability (mean over documents)\n\n")
        parts.append(_md_table(("measure", "value"), (
            (READABILITY_LABELS[k], f"{v:.2f}") for k, v in an.readability_mean.to_dict().items())))
        return "".join(parts)
    raise ValueError(f"unknown format {fmt!r}")


# -- compare -----------------------------------------------------------------

def format_p(p: float) -> str:
    if p < 0.001:
        return "<0.001"
    if p < 0.01:
        return "<0.01"
    text = f"{p:.2f}"
    return "1" if text == "1.00" else text


def comparison_dict(rows: Sequence[ComparisonRow], label_a: str, label_b: str, alpha: float) -> dict:
    tested, skipped = [], []
    for r in rows:
        if r.result is None:
            skipped.append({"level": r.level, "feature": r.feature, "note": r.note})
            continue
        res = r.result
        tested.append({
            "level": r.level, "feature": r.feature, "display_name": r.display_name,
            "core": r.core, "count_a": r.count_a, "count_b": r.count_b, "n": res.n,
            "p_value": res.p_value, "ci_low": res.ci_low, "ci_high": res.ci_high,
            "prob": res.prob, "cohens_h": res.cohens_h, "effect_label": res.effect_label,
            "significant": res.significant,
        })
    return {"corpus_a": label_a, "corpus_b": label_b, "alpha": alpha, "rows": tested, "skipped": skipped}


def render_comparison(rows: Sequence[ComparisonRow], fmt: str, label_a: str = "A",
                      label_b: str = "B", alpha: float = 0.05) -> str:
    if fmt == "json":
        return _json(comparison_dict(rows, label_a, label_b, alpha))
    if fmt == "csv":
        out = []
        for r in rows:
            if r.result is None:
                continue
            res = r.result
            out.append((r.level, r.feature, res.p_value, res.ci_low, res.ci_high, res.prob,
                        res.cohens_h, res.effect_label, str(res.significant).lower()))
        return _csv(COMPARE_COLUMNS, out)
    if fmt == "md":
        out = []
        previous = None
        for r in rows:
            if r.result is None:
                continue
            res = r.result
            out.append((
                r.level if r.level != previous else "", r.display_name, format_p(res.p_value),
                f"{res.ci_low:.2f} – {res.ci_high:.2f}", f"{res.prob:.2f}", f"{res.cohens_h:.2f}",
            ))
            previous = r.level
        text = (f"Binomial tests: prob is the share of `{label_a}` in `{label_a}` + `{label_b}`.\n\n"
                + _md_table(("levels", "feature", "p-value", "95% CI", "prob", "Cohen's h"), out))
        notes = [f"- {r.level}/{r.feature}: {r.note}" for r in rows if r.result is None]
        if notes:
            text += "\nSkipped features:\n\n" + "\n".join(notes) + "\n"
        return text
    raise ValueError(f"unknown format {fmt!r}")


def figure_rows(rows: Sequence[ComparisonRow]) -> list[tuple]:
    return [(r.feature, r.count_a, r.count_b, r.level) for r in rows]


def render_figure_data(rows: Sequence[ComparisonRow]) -> str:
    return _csv(FIGURE_COLUMNS, figure_rows(rows))


# -- readability ---------------------------------------------------------------

def render_readability(reports: Sequence[tuple[str, ReadabilityReport]], fmt: str) -> str:
    """One row per measure, one value column per corpus."""
    names = [f.name for f in fields(ReadabilityReport)]
    labels = [label for label, _ in reports]
    if fmt == "json":
        return _json({
            "corpora": labels,
            "rows": [
                {"measure": n, "label": READABILITY_LABELS[n],
                 "values": {label: getattr(rep, n) for label, rep in reports}}
                for n in names
            ],
        })
    if fmt == "csv":
        return _csv(["measure"] + labels,
                    [[READABILITY_LABELS[n]] + [getattr(rep, n) for _, rep in reports] for n in names])
    if fmt == "md":
        return _md_table(["Readability"] + labels,
                         [[READABILITY_LABELS[n]] + [f"{getattr(rep, n):.2f}" for _, rep in reports]
                          for n in names])
    raise ValueError(f"unknown format {fmt!r}")
