import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from citerank.graph import TermLabeledGraph
from citerank.terms import (
    SimilarTermSet,
    TermDocumentMatrix,
    build_matrix,
    descriptive_terms,
    idf,
    pearson,
    similar_terms,
    sparse_pearson,
    weight_matrix,
)

from .conftest import TOY_F
from .strategies import labeled_graphs


def exact_pearson(x, y):
    """Rational-arithmetic Pearson, the independent oracle."""
    n = len(x)
    x = [Fraction(v) for v in x]
    y = [Fraction(v) for v in y]
    mx, my = sum(x) / n, sum(y) / n
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    if sxx == 0 or syy == 0:
        return 0.0
    return float(sxy) / math.sqrt(sxx * syy)


@pytest.fixture(scope="module")
def toy_F(toy_graph):
    return build_matrix(toy_graph)


@pytest.fixture(scope="module")
def toy_N(toy_F):
    return weight_matrix(toy_F)


def test_toy_matrix_matches_worked_example(toy_F):
    assert toy_F.terms == tuple(TOY_F)
    assert toy_F.articles == ("a1", "a2", "a3", "a4", "a5", "a6")
    assert toy_F.dense() == list(TOY_F.values())


def test_empty_graph_matrix():
    F = build_matrix(TermLabeledGraph.from_arcs({}, nodes=["a"]))
    assert F.terms == () and dict(F.entries) == {}


def test_distinct_citers_counted_once():
    g = TermLabeledGraph.from_arcs({("a", "j"): {"β"}, ("b", "j"): {"β"}})
    assert build_matrix(g).get("β", "j") == 2


@settings(max_examples=60)
@given(labeled_graphs())
def test_matrix_matches_brute_force(graph):
    F = build_matrix(graph)
    for term in F.terms:
        for j in graph.nodes:
            citers = {i for i in graph.nodes if (i, j) in graph.arcs and term in graph.arcs[(i, j)]}
            assert F.get(term, j) == len(citers)


def test_idf_values(toy_F):
    assert idf(toy_F, "τ1") == pytest.approx(0.6931471805599453, abs=1e-12)
    assert idf(toy_F, "τ3") == pytest.approx(1.791759469228055, abs=1e-12)


def test_idf_ubiquitous_term_is_zero():
    F = TermDocumentMatrix(("β",), ("x", "y"), {("β", "x"): 1, ("β", "y"): 3})
    assert idf(F, "β") == 0.0
    N = weight_matrix(F)
    assert all(v == 0.0 for v in N.row("β").values())


def test_idf_zero_row_errors():
    F = TermDocumentMatrix(("β",), ("x",), {})
    with pytest.raises(ValueError):
        idf(F, "β")


def test_weight_matrix_drops_zero_rows():
    F = TermDocumentMatrix(("a", "b"), ("x", "y"), {("a", "x"): 1})
    assert weight_matrix(F).terms == ("a",)


def test_weighted_entry(toy_N):
    assert toy_N.get("τ1", "a4") == pytest.approx(1.3862943611198906, abs=1e-12)


def test_pearson_self_is_one():
    v = [0.0, 3.0, 1.0, 2.0]
    assert pearson(v, v) == pytest.approx(1.0, abs=1e-12)


def test_pearson_toy_tau1_tau4():
    x, y = TOY_F["τ1"], TOY_F["τ4"]
    assert exact_pearson(x, y) == pytest.approx(-0.15811388300841894, abs=1e-15)
    assert pearson(x, y) == pytest.approx(-0.1581138830, abs=1e-10)


def test_pearson_constant_is_zero():
    assert pearson([2, 2, 2], [1, 5, 3]) == 0.0


def test_pearson_length_mismatch():
    with pytest.raises(ValueError):
        pearson([1, 2], [1, 2, 3])


vectors = st.integers(2, 30).flatmap(
    lambda n: st.tuples(*[st.lists(st.integers(0, 6), min_size=n, max_size=n)] * 2)
)


@given(vectors)
def test_pearson_properties(xy):
    x, y = xy
    p = pearson(x, y)
    assert -1.0 - 1e-12 <= p <= 1.0 + 1e-12
    assert p == pearson(y, x)
    assert p == pytest.approx(exact_pearson(x, y), abs=1e-12)


@given(vectors)
def test_sparse_and_dense_pearson_agree(xy):
    x, y = xy
    cols = [f"c{k:02d}" for k in range(len(x))]
    sx = {c: float(v) for c, v in zip(cols, x) if v}
    sy = {c: float(v) for c, v in zip(cols, y) if v}
    assert sparse_pearson(sx, sy, len(x)) == pytest.approx(pearson(x, y), abs=1e-12)
    assert sparse_pearson(sx, sy, len(x)) == sparse_pearson(sy, sx, len(x))


def test_identical_rows_similar(toy_N):
    s = similar_terms(toy_N, "τ4", 0.9)
    assert list(s.scores) == ["τ4", "τ5"]
    assert s.scores["τ5"] == pytest.approx(1.0, abs=1e-12)


def test_high_threshold_keeps_only_query(toy_N):
    s = similar_terms(toy_N, "τ1", 0.99)
    assert dict(s.scores) == {"τ1": 1.0}


def test_similar_terms_ordering_and_threshold(toy_N):
    s = similar_terms(toy_N, "τ2", 0.1)
    assert s.scores["τ2"] == 1.0
    vals = list(s.scores.items())
    assert vals == sorted(vals, key=lambda kv: (-kv[1], kv[0]))
    assert all(v >= 0.1 for v in s.scores.values())


def test_similar_terms_errors(toy_N):
    with pytest.raises(KeyError):
        similar_terms(toy_N, "zzz", 0.5)
    with pytest.raises(ValueError):
        similar_terms(toy_N, "τ1", 1.0)


def test_power_law_fixture_shape():
    # structural fixture mirroring the published "power law" similar set
    published = {"power law": 1.00, "degree distribution": 0.83, "web graph": 0.56,
                 "preferential attachment": 0.45, "scale free": 0.38}
    s = SimilarTermSet("power law", published, 0.35)
    assert "power law" in s and s.scores["power law"] == 1.0
    assert all(v >= s.threshold for v in s.scores.values())
    assert list(s.scores.values()) == sorted(s.scores.values(), reverse=True)


def test_descriptive_terms_a6(toy_N):
    rows = descriptive_terms(toy_N, "a6", 10)
    assert [t for t, _ in rows] == ["τ3", "τ2", "τ1"]
    np.testing.assert_allclose([v for _, v in rows], [2 * math.log(6), math.log(3), math.log(2)], atol=1e-12)
    assert descriptive_terms(toy_N, "a6", 1) == [("τ3", pytest.approx(3.58351893845611, abs=1e-12))]


def test_descriptive_terms_empty_column(toy_N):
    assert descriptive_terms(toy_N, "a1", 5) == []
    assert descriptive_terms(toy_N, "a6", 0) == []
    with pytest.raises(KeyError):
        descriptive_terms(toy_N, "nope", 3)


@settings(max_examples=60)
@given(labeled_graphs(max_nodes=20))
def test_descriptive_terms_sorts_column(graph):
    N = weight_matrix(build_matrix(graph))
    for j in graph.nodes:
        col = sorted((v for (t, a), v in N.entries.items() if a == j and v > 0), reverse=True)
        assert [v for _, v in descriptive_terms(N, j, len(N.terms) + 1)] == col


@settings(max_examples=40)
@given(labeled_graphs(max_nodes=30), st.floats(0.05, 0.95))
def test_query_always_in_own_similar_set(graph, delta):
    N = weight_matrix(build_matrix(graph))
    for term in N.terms:
        s = similar_terms(N, term, delta)
        assert s.scores[term] == 1.0


def test_exact_threshold_tie_is_similar():
    F = TermDocumentMatrix(("x", "y"), ("a", "b", "c", "d", "e"),
                           {("x", "a"): 1, ("x", "b"): 1, ("y", "a"): 1, ("y", "b"): 1, ("y", "c"): 1})
    p = exact_pearson([1, 1, 0, 0, 0], [1, 1, 1, 0, 0])
    assert "y" in similar_terms(F, "x", p)
    assert "y" in similar_terms(weight_matrix(F), "x", p)
    assert "y" not in similar_terms(F, "x", p + 1e-9)
