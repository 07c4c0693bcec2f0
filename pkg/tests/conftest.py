import os

import pytest

from lingdiff.analysis import data_path, load_resources
from lingdiff.model import Document, Sentence, Token


@pytest.fixture(scope="session")
def res():
    """Bundled lexicon, word list, label map and models (loaded once)."""
    return load_resources()


@pytest.fixture(scope="session")
def essays_dir():
    return data_path("essays")


@pytest.fixture(scope="session")
def treebank_dir():
    return data_path("treebank")


def make_doc(rows, doc_id="d1"):
    """Build an annotated document from ``(surface, upos, head, deprel)`` rows.

    A row of ``None`` starts a new sentence. ``head``/``deprel`` may be None
    for tag-only documents.
    """
    sentences, current, pos = [], [], 0
    for row in list(rows) + [None]:
        if row is None:
            if current:
                sentences.append(Sentence(current))
            current = []
            continue
        surface, upos, head, deprel = (tuple(row) + (None, None))[:4]
        current.append(Token(surface, pos, pos + len(surface), upos, None, head, deprel))
        pos += len(surface) + 1
    return Document(doc_id, tuple(sentences))


def pytest_report_header(config):
    return f"lingdiff data: {os.path.dirname(data_path('cmudict.txt.gz'))}"


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
