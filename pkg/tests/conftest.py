import pytest

from citerank.corpus import read_corpus
from citerank.graph import build_graph
from citerank.query import PreparedIndex
from citerank.synthetic import toy_corpus_path

# filled by test_acceptance; printed once at the end of the run
ACCEPTANCE_RESULTS = {}

# Term document matrix of the six-article worked example, rows τ1..τ5, columns a1..a6.
TOY_F = {
    "τ1": [0, 0, 1, 2, 0, 1],
    "τ2": [0, 0, 0, 1, 0, 1],
    "τ3": [0, 0, 0, 0, 0, 2],
    "τ4": [0, 0, 1, 0, 1, 0],
    "τ5": [0, 0, 1, 0, 1, 0],
}


@pytest.fixture(scope="session")
def toy_index():
    return read_corpus(toy_corpus_path())


@pytest.fixture(scope="session")
def toy_graph(toy_index):
    return build_graph(toy_index)


@pytest.fixture(scope="session")
def toy_prepared(toy_index):
    return PreparedIndex.from_corpus(toy_index)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=int):
        ok, desc = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  AC{key}: {desc}")
