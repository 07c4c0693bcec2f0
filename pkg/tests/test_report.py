import csv
import io
import json

import pytest

from lingdiff.analysis import analyze_corpus, compare_corpora
from lingdiff.ingest import load_corpus
from lingdiff.plotting import render_figures
from lingdiff.readability import READABILITY_LABELS
from lingdiff.registry import DEFAULT_REGISTRY, LEVELS, FeatureEntry, FeatureRegistry
from lingdiff.report import (COMPARE_COLUMNS, FIGURE_COLUMNS, format_p, render_analysis, render_comparison,
                             render_figure_data, render_readability)

CORE_ROWS = {
    "phonology": 14, "morphology": 10, "syntax": 9, "lexicon": 4,
}


@pytest.fixture(scope="module")
def analyses(res, essays_dir):
    human = analyze_corpus(load_corpus(f"{essays_dir}/human", "human"), res)
    ai = analyze_corpus(load_corpus(f"{essays_dir}/ai", "ai"), res)
    return human, ai


@pytest.fixture(scope="module")
def rows(analyses):
    return compare_corpora(*analyses)


def test_registry_marks_core_rows():
    for level, n in CORE_ROWS.items():
        assert sum(e.core for e in DEFAULT_REGISTRY if e.level == level) == n
    keys = [e.key for e in DEFAULT_REGISTRY]
    assert ("morphology", "determiner") in keys and ("syntax", "determiner") in keys
    assert not DEFAULT_REGISTRY.get("lexicon", "types").compared


def test_registry_order_and_unknown_features():
    present = {"syntax": {"zzz:new", "root", "aux", "aaa:new"}, "phonology": {"nasal"}}
    ordered = DEFAULT_REGISTRY.ordered(present)
    levels = [e.level for e in ordered]
    assert levels == sorted(levels, key=LEVELS.index)
    syntax = [e.name for e in ordered if e.level == "syntax"]
    assert syntax[-2:] == ["aaa:new", "zzz:new"]
    assert "aux" in syntax and "acl" not in syntax  # extensions only when present
    assert all(e.core for e in DEFAULT_REGISTRY.ordered(present, core_only=True))
    with pytest.raises(ValueError):
        FeatureRegistry([FeatureEntry("a", "syntax", "a", True)] * 2)


def test_comparison_rows(rows):
    tested = [r for r in rows if r.result is not None]
    assert tested and all(r.count_a + r.count_b > 0 for r in tested)
    assert all(r.count_a == r.count_b == 0 for r in rows if r.result is None)
    assert not any(r.feature in ("types", "hapax_legomena") for r in rows)


def test_compare_csv_columns(rows):
    text = render_comparison(rows, "csv")
    reader = list(csv.reader(io.StringIO(text)))
    assert tuple(reader[0]) == COMPARE_COLUMNS
    assert len(reader) - 1 == sum(r.result is not None for r in rows)
    assert {line[-1] for line in reader[1:]} <= {"true", "false"}


def test_compare_json(rows):
    data = json.loads(render_comparison(rows, "json", "human", "ai", 0.05))
    assert (data["corpus_a"], data["corpus_b"], data["alpha"]) == ("human", "ai", 0.05)
    first = data["rows"][0]
    assert first["level"] == "phonology" and 0 <= first["p_value"] <= 1
    assert len(data["rows"]) + len(data["skipped"]) == len(rows)


def test_compare_markdown(rows):
    text = render_comparison(rows, "md", "human", "ai")
    assert "| levels | feature | p-value | 95% CI | prob | Cohen's h |" in text
    assert "| phonology | approximant |" in text
    assert " – " in text


def test_figure_data(rows):
    reader = list(csv.reader(io.StringIO(render_figure_data(rows))))
    assert tuple(reader[0]) == FIGURE_COLUMNS
    assert len(reader) - 1 == len(rows)


@pytest.mark.parametrize("p, text", [(0.0004, "<0.001"), (0.004, "<0.01"), (0.123, "0.12"),
                                     (0.999, "1"), (1.0, "1"), (0.5, "0.50")])
def test_format_p(p, text):
    assert format_p(p) == text


def test_analysis_formats(analyses):
    human, _ = analyses
    data = json.loads(render_analysis(human, "json"))
    assert data["corpus"] == "human" and len(data["documents"]) == 5
    assert set(data["pooled"]["counts"]) == set(LEVELS)
    assert data["pooled"]["counts"]["morphology"]["noun"] == sum(
        d["counts"]["morphology"]["noun"] for d in data["documents"])
    header = render_analysis(human, "csv").splitlines()[0]
    assert header == "document,level,feature,value"
    assert "## phonology" in render_analysis(human, "md")
    with pytest.raises(ValueError):
        render_analysis(human, "xml")


def test_readability_table(analyses):
    human, ai = analyses
    reports = [("human", human.readability_mean), ("ai", ai.readability_mean)]
    md = render_readability(reports, "md")
    assert md.splitlines()[0] == "| Readability | human | ai |"
    assert all(label in md for label in READABILITY_LABELS.values())
    rows = list(csv.reader(io.StringIO(render_readability(reports, "csv"))))
    assert rows[0] == ["measure", "human", "ai"] and len(rows) == 1 + len(READABILITY_LABELS)


def test_figures_written(rows, tmp_path):
    paths = render_figures(rows, tmp_path, "human", "ai")
    assert [p.rsplit("/", 1)[-1] for p in paths] == [
        "figure_phonology.png", "figure_morphosyntax.png", "figure_lexicon.png"]
    for p in paths:
        with open(p, "rb") as fh:
            assert fh.read(8) == b"\x89PNG\r\n\x1a\n"
