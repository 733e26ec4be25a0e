"""Context-sensitive ranking of articles over term-labelled citation networks."""

from .corpus import (
    ArticleRecord,
    CitationRecord,
    CorpusError,
    CorpusIndex,
    IngestConfig,
    TermDictionary,
    build_term_dictionary,
    extract_window,
    identify_terms,
    normalize,
    parse_corpus,
    read_corpus,
)
from .graph import (
    TermLabeledGraph,
    TermSubgraph,
    WeightedCitationGraph,
    build_graph,
    superpose,
    term_subgraph,
    union_term_sets,
)
from .query import (
    NetworkStats,
    NoCitationEvidenceError,
    PreparedIndex,
    QueryConfig,
    QueryResult,
    UnknownTermError,
    rank_for_term,
    report_network_stats,
)
from .ranking import NoLinkStructure, RankConfig, RankingResult, hits, indegree_rank, pagerank
from .snapshot import IndexSnapshot, build_snapshot, load_snapshot, save_snapshot
from .terms import (
    SimilarTermSet,
    TermDocumentMatrix,
    WeightedTermDocumentMatrix,
    build_matrix,
    descriptive_terms,
    idf,
    pearson,
    similar_terms,
    weight_matrix,
)

__version__ = "0.1.0"
