"""Term-labelled citation networks, per-term subgraphs and superposition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .corpus import CorpusIndex, IngestConfig, extract_window, identify_terms

Arc = tuple[str, str]


@dataclass(frozen=True)
class TermLabeledGraph:
    """Directed citation graph; each arc (i, j) carries the set of terms used by i when citing j."""

    nodes: tuple[str, ...]
    arcs: Mapping[Arc, frozenset[str]]

    def __post_init__(self):
        known = set(self.nodes)
        for i, j in self.arcs:
            if i == j:
                raise ValueError(f"self-loop on {i!r}")
            if i not in known or j not in known:
                raise ValueError(f"arc ({i!r}, {j!r}) has an endpoint outside the node set")

    @classmethod
    def from_arcs(cls, arcs: Mapping[Arc, set[str] | frozenset[str]], nodes=()) -> TermLabeledGraph:
        all_nodes = set(nodes)
        for i, j in arcs:
            all_nodes.update((i, j))
        ordered = {arc: frozenset(arcs[arc]) for arc in sorted(arcs)}
        return cls(tuple(sorted(all_nodes)), ordered)


@dataclass(frozen=True)
class TermSubgraph:
    term: str
    nodes: tuple[str, ...]
    arcs: tuple[Arc, ...]

    def as_weighted(self) -> WeightedCitationGraph:
        return WeightedCitationGraph(self.nodes, {arc: 1.0 for arc in self.arcs})


@dataclass(frozen=True)
class WeightedCitationGraph:
    nodes: tuple[str, ...]
    arcs: Mapping[Arc, float]

    def __post_init__(self):
        for arc, w in self.arcs.items():
            if not w > 0:
                raise ValueError(f"arc {arc} has non-positive weight {w}")

    def in_degree(self, node: str) -> float:
        return sum(w for (_, j), w in self.arcs.items() if j == node)

    def out_degree(self, node: str) -> float:
        return sum(w for (i, _), w in self.arcs.items() if i == node)


def build_graph(index: CorpusIndex, config: IngestConfig = IngestConfig()) -> TermLabeledGraph:
    labels: dict[Arc, set[str]] = {}
    for c in index.citations:
        window = extract_window(c.context_text, c.marker_offset, config.window_chars)
        labels.setdefault((c.source_id, c.target_id), set()).update(
            identify_terms(window, index.dictionary, config)
        )
    return TermLabeledGraph.from_arcs(labels, nodes=index.articles)


def _endpoints(arcs) -> tuple[str, ...]:
    nodes = set()
    for i, j in arcs:
        nodes.update((i, j))
    return tuple(sorted(nodes))


def term_subgraph(graph: TermLabeledGraph, term: str, reduce: bool = True) -> TermSubgraph:
    arcs = tuple(arc for arc, labels in graph.arcs.items() if term in labels)
    nodes = _endpoints(arcs) if reduce else graph.nodes
    return TermSubgraph(term, nodes, arcs)


def union_term_sets(graph: TermLabeledGraph) -> set[str]:
    terms = set()
    for labels in graph.arcs.values():
        terms |= labels
    return terms


def superpose(graph: TermLabeledGraph, similar, reduce: bool = True) -> WeightedCitationGraph:
    """Merge the subgraphs of every term in ``similar``.

    ``similar`` is a :class:`~citerank.terms.SimilarTermSet` (or any object
    with a ``scores`` mapping). An arc's weight is the sum of the scores of
    the similar terms on its label.
    """
    scores = similar.scores
    bad = [t for t, s in scores.items() if not s > 0]
    if bad:
        raise ValueError(f"similarity scores must be positive: {sorted(bad)}")
    weighted: dict[Arc, float] = {}
    for arc, labels in graph.arcs.items():
        hit = sorted(labels.intersection(scores))
        if hit:
            w = 0.0
            for term in hit:
                w += scores[term]
            weighted[arc] = w
    nodes = _endpoints(weighted) if reduce else graph.nodes
    return WeightedCitationGraph(nodes, weighted)
