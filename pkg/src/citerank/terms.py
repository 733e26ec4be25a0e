"""Term-document matrices, idf weighting and Pearson term similarity."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graph import TermLabeledGraph, union_term_sets

log = logging.getLogger(__name__)

# correlations this close below the threshold still count: exact ties must not
# depend on whether F or N (or a different summation path) produced them
THRESHOLD_SLACK = 1e-12


@dataclass(frozen=True)
class TermDocumentMatrix:
    """Sparse F: entry (term, article) = number of distinct articles citing ``article`` with ``term``."""

    terms: tuple[str, ...]
    articles: tuple[str, ...]
    entries: Mapping[tuple[str, str], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "_rows", _rows_of(self.terms, self.entries))

    def row(self, term: str) -> dict[str, int]:
        return self._rows[term]

    def get(self, term: str, article: str) -> int:
        return self.entries.get((term, article), 0)

    def dense(self) -> list[list[int]]:
        return [[self.get(t, a) for a in self.articles] for t in self.terms]


@dataclass(frozen=True)
class WeightedTermDocumentMatrix:
    """N = D F with D the diagonal of per-term idf values."""

    terms: tuple[str, ...]
    articles: tuple[str, ...]
    entries: Mapping[tuple[str, str], float] = field(default_factory=dict)
    idf_values: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "_rows", _rows_of(self.terms, self.entries))

    def row(self, term: str) -> dict[str, float]:
        return self._rows[term]

    def get(self, term: str, article: str) -> float:
        return self.entries.get((term, article), 0.0)


def _rows_of(terms, entries):
    rows = {t: {} for t in terms}
    for (t, a), v in entries.items():
        rows[t][a] = v
    return rows


@dataclass(frozen=True)
class SimilarTermSet:
    query_term: str
    scores: Mapping[str, float]
    threshold: float

    def __contains__(self, term: str) -> bool:
        return term in self.scores

    def __len__(self) -> int:
        return len(self.scores)

    @classmethod
    def single(cls, term: str, threshold: float = 0.35) -> SimilarTermSet:
        return cls(term, {term: 1.0}, threshold)


def build_matrix(graph: TermLabeledGraph) -> TermDocumentMatrix:
    counts: dict[tuple[str, str], int] = {}
    for (_, j), labels in graph.arcs.items():
        # arcs are unique per (i, j), so each increment is a distinct citer
        for term in labels:
            counts[(term, j)] = counts.get((term, j), 0) + 1
    terms = tuple(sorted(union_term_sets(graph)))
    entries = {key: counts[key] for key in sorted(counts)}
    return TermDocumentMatrix(terms, graph.nodes, entries)


def idf(F: TermDocumentMatrix, term: str) -> float:
    """Natural-log inverse document frequency of ``term``'s row."""
    receiving = sum(1 for v in F.row(term).values() if v > 0)
    if receiving == 0:
        raise ValueError(f"term {term!r} has an all-zero row; idf is undefined")
    return math.log(len(F.articles) / receiving)


def weight_matrix(F: TermDocumentMatrix) -> WeightedTermDocumentMatrix:
    idf_values = {}
    for term in F.terms:
        if any(v > 0 for v in F.row(term).values()):
            idf_values[term] = idf(F, term)
        else:
            log.warning("dropping term %r: all-zero row", term)
    entries = {
        (t, a): idf_values[t] * f for (t, a), f in F.entries.items() if t in idf_values and f
    }
    terms = tuple(t for t in F.terms if t in idf_values)
    return WeightedTermDocumentMatrix(terms, F.articles, entries, idf_values)


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample Pearson correlation; 0.0 when either vector has zero variance."""
    n = len(x)
    if n != len(y):
        raise ValueError(f"length mismatch: {n} != {len(y)}")
    if n < 2:
        raise ValueError("need at least two entries")
    mx = sum(x) / n
    my = sum(y) / n
    sxy = sxx = syy = 0.0
    for xi, yi in zip(x, y):
        dx, dy = xi - mx, yi - my
        sxy += dx * dy
        sxx += dx * dx
        syy += dy * dy
    return _ratio(sxy, sxx, syy)


def _ratio(sxy, sxx, syy) -> float:
    if sxx <= 0.0 or syy <= 0.0:
        return 0.0
    r = sxy / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def sparse_pearson(x: Mapping[str, float], y: Mapping[str, float], n: int) -> float:
    """Pearson over length-``n`` vectors given as sparse {column: value} maps.

    Deviations over explicit entries are summed in sorted column order; the
    implicit zero columns contribute in closed form.
    """
    if n < 2:
        raise ValueError("need at least two columns")
    mx = sum(x[k] for k in sorted(x)) / n
    my = sum(y[k] for k in sorted(y)) / n
    support = sorted(set(x) | set(y))
    sxy = sxx = syy = 0.0
    for k in support:
        dx = x.get(k, 0.0) - mx
        dy = y.get(k, 0.0) - my
        sxy += dx * dy
        sxx += dx * dx
        syy += dy * dy
    zeros = n - len(support)
    sxy += zeros * (mx * my)
    sxx += zeros * (mx * mx)
    syy += zeros * (my * my)
    return _ratio(sxy, sxx, syy)


def similar_terms(N, query: str, delta: float = 0.35) -> SimilarTermSet:
    """Terms whose row correlates with ``query``'s row at ``delta`` or above.

    Works on either matrix form. Scores are ordered by (score desc, term asc);
    the query itself is always present with score 1.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    if query not in N.terms:
        raise KeyError(query)
    n = len(N.articles)
    base = N.row(query)
    scores = {query: 1.0}
    for term in N.terms:
        if term == query:
            continue
        p = sparse_pearson(base, N.row(term), n)
        if p >= delta - THRESHOLD_SLACK:
            scores[term] = p
    ordered = dict(sorted(scores.items(), key=lambda kv: (-kv[1], kv[0])))
    return SimilarTermSet(query, ordered, delta)


def descriptive_terms(N: WeightedTermDocumentMatrix, article: str, k: int = 10) -> list[tuple[str, float]]:
    """Top-``k`` terms describing ``article`` by weighted in-citation frequency."""
    if article not in N.articles:
        raise KeyError(article)
    column = [(t, v) for (t, a), v in N.entries.items() if a == article and v > 0]
    column.sort(key=lambda tv: (-tv[1], tv[0]))
    return column[:max(k, 0)]
