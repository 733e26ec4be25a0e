"""Per-term ranking pipeline: similar terms -> superposed network -> rankings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .corpus import CorpusIndex, IngestConfig, TermDictionary, normalize
from .graph import TermLabeledGraph, build_graph, superpose, term_subgraph
from .ranking import ALGORITHMS, RankConfig, RankingResult, hits, indegree_rank, pagerank
from .terms import (
    SimilarTermSet,
    TermDocumentMatrix,
    WeightedTermDocumentMatrix,
    build_matrix,
    similar_terms,
    weight_matrix,
)


class QueryError(LookupError):
    pass


class UnknownTermError(QueryError):
    def __init__(self, term: str, suggestions: list[str]):
        self.term = term
        self.suggestions = suggestions
        msg = f"unknown term {term!r}"
        if suggestions:
            msg += "; did you mean: " + ", ".join(suggestions)
        super().__init__(msg)


class NoCitationEvidenceError(QueryError):
    def __init__(self, term: str):
        self.term = term
        super().__init__(f"no citation evidence for term {term!r}")


@dataclass(frozen=True)
class QueryConfig:
    delta: float = 0.35
    use_similar_terms: bool = True
    rank_config: RankConfig = field(default_factory=RankConfig)
    algorithms: tuple[str, ...] = ALGORITHMS
    top_k: int = 10
    emit_hubs: bool = False

    def __post_init__(self):
        if not 0.0 < self.delta < 1.0:
            raise ValueError("delta must lie in (0, 1)")
        if not self.algorithms:
            raise ValueError("at least one algorithm is required")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise ValueError(f"unknown algorithm(s): {sorted(unknown)}")


@dataclass(frozen=True)
class PreparedIndex:
    """Everything a query needs, built once per corpus."""

    graph: TermLabeledGraph
    matrix_F: TermDocumentMatrix
    matrix_N: WeightedTermDocumentMatrix
    dictionary: TermDictionary
    titles: Mapping[str, str] = field(default_factory=dict)

    @classmethod
    def from_corpus(cls, index: CorpusIndex, config: IngestConfig = IngestConfig()) -> PreparedIndex:
        graph = build_graph(index, config)
        F = build_matrix(graph)
        return cls(
            graph=graph,
            matrix_F=F,
            matrix_N=weight_matrix(F),
            dictionary=index.dictionary,
            titles={a: r.title for a, r in index.articles.items()},
        )


@dataclass(frozen=True)
class QueryResult:
    query_term: str
    similar_terms: SimilarTermSet
    network_size: tuple[int, int]
    rankings: Mapping[str, RankingResult]
    term_network_size: tuple[int, int] = (0, 0)
    network_nodes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "query_term": self.query_term,
            "similar_terms": {
                "query_term": self.similar_terms.query_term,
                "threshold": self.similar_terms.threshold,
                "scores": [[t, s] for t, s in self.similar_terms.scores.items()],
            },
            "network_size": {"nodes": self.network_size[0], "arcs": self.network_size[1]},
            "rankings": {name: r.to_dict() for name, r in self.rankings.items()},
        }


@dataclass(frozen=True)
class NetworkStats:
    nodes: int
    arcs: int
    term_nodes: int
    term_arcs: int
    enrichment_delta: int


def resolve_term(prepared: PreparedIndex, term: str) -> str:
    key = normalize(term)
    if key not in prepared.dictionary:
        raise UnknownTermError(term, prepared.dictionary.suggest(term))
    if key not in prepared.matrix_N.terms:
        raise NoCitationEvidenceError(key)
    return key


def rank_for_term(
    prepared: PreparedIndex,
    term: str,
    config: QueryConfig = QueryConfig(),
    similar: SimilarTermSet | None = None,
) -> QueryResult:
    """Rank articles for ``term`` on its (similar-term enriched) citation network.

    ``similar`` overrides the computed similar-term set.
    """
    beta = resolve_term(prepared, term)
    if similar is None:
        if config.use_similar_terms:
            similar = similar_terms(prepared.matrix_N, beta, config.delta)
        else:
            similar = SimilarTermSet.single(beta, config.delta)
    network = superpose(prepared.graph, similar, reduce=True)
    base = term_subgraph(prepared.graph, beta, reduce=True)

    rankings: dict[str, RankingResult] = {}
    for algorithm in config.algorithms:
        if algorithm == "indegree":
            rankings["indegree"] = indegree_rank(network)
        elif algorithm == "hits":
            authority, hub = hits(network, config.rank_config)
            rankings["hits_authority"] = authority
            if config.emit_hubs:
                rankings["hits_hub"] = hub
        elif algorithm == "pagerank":
            rankings["pagerank"] = pagerank(network, config.rank_config)
    rankings = {name: r.top(config.top_k) for name, r in rankings.items()}

    return QueryResult(
        query_term=beta,
        similar_terms=similar,
        network_size=(len(network.nodes), len(network.arcs)),
        rankings=rankings,
        term_network_size=(len(base.nodes), len(base.arcs)),
        network_nodes=network.nodes,
    )


def report_network_stats(result: QueryResult) -> NetworkStats:
    nodes, arcs = result.network_size
    term_nodes, term_arcs = result.term_network_size
    return NetworkStats(nodes, arcs, term_nodes, term_arcs, nodes - term_nodes)
