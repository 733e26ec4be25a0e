"""Single-file index snapshots.

A snapshot is canonical JSON (sorted keys, fixed separators, no timestamps)
so identical corpora always produce byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path

from .corpus import CorpusIndex, IngestConfig, TermDictionary
from .graph import TermLabeledGraph
from .query import PreparedIndex
from .terms import TermDocumentMatrix, WeightedTermDocumentMatrix, weight_matrix

FORMAT_VERSION = 1


class SnapshotError(ValueError):
    pass


class SnapshotVersionError(SnapshotError):
    pass


@dataclass(frozen=True)
class IndexSnapshot:
    format_version: int
    corpus_digest: str
    config: IngestConfig
    prepared: PreparedIndex

    @property
    def graph(self) -> TermLabeledGraph:
        return self.prepared.graph

    @property
    def matrix_F(self) -> TermDocumentMatrix:
        return self.prepared.matrix_F

    @property
    def matrix_N(self) -> WeightedTermDocumentMatrix:
        return self.prepared.matrix_N

    @property
    def dictionary(self) -> TermDictionary:
        return self.prepared.dictionary


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def corpus_digest(index: CorpusIndex) -> str:
    payload = {
        "articles": [[a.article_id, a.title, list(a.keywords)] for a in index.articles.values()],
        "citations": [[c.source_id, c.target_id, c.context_text, c.marker_offset] for c in index.citations],
    }
    return hashlib.sha256(_dumps(payload).encode("utf-8")).hexdigest()


def build_snapshot(index: CorpusIndex, config: IngestConfig = IngestConfig()) -> IndexSnapshot:
    return IndexSnapshot(FORMAT_VERSION, corpus_digest(index), config, PreparedIndex.from_corpus(index, config))


def to_json(snapshot: IndexSnapshot) -> str:
    p = snapshot.prepared
    doc = {
        "format_version": snapshot.format_version,
        "corpus_digest": snapshot.corpus_digest,
        "config": asdict(snapshot.config),
        "dictionary": sorted(p.dictionary.terms),
        "titles": dict(sorted(p.titles.items())),
        "graph": {
            "nodes": list(p.graph.nodes),
            "arcs": [[i, j, sorted(labels)] for (i, j), labels in sorted(p.graph.arcs.items())],
        },
        "matrix_F": {
            "terms": list(p.matrix_F.terms),
            "articles": list(p.matrix_F.articles),
            "entries": [[t, a, f] for (t, a), f in sorted(p.matrix_F.entries.items())],
        },
        "matrix_N": {
            "terms": list(p.matrix_N.terms),
            "idf": dict(sorted(p.matrix_N.idf_values.items())),
            "entries": [[t, a, v] for (t, a), v in sorted(p.matrix_N.entries.items())],
        },
    }
    return _dumps(doc) + "\n"


def from_json(text: str) -> IndexSnapshot:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SnapshotError(f"not a snapshot: {exc.msg}") from None
    version = doc.get("format_version") if isinstance(doc, dict) else None
    if version != FORMAT_VERSION:
        raise SnapshotVersionError(f"snapshot format version {version!r}, expected {FORMAT_VERSION}")
    try:
        graph = TermLabeledGraph(
            tuple(doc["graph"]["nodes"]),
            {(i, j): frozenset(labels) for i, j, labels in doc["graph"]["arcs"]},
        )
        fdoc = doc["matrix_F"]
        F = TermDocumentMatrix(
            tuple(fdoc["terms"]), tuple(fdoc["articles"]), {(t, a): f for t, a, f in fdoc["entries"]}
        )
        ndoc = doc["matrix_N"]
        N = WeightedTermDocumentMatrix(
            tuple(ndoc["terms"]), F.articles, {(t, a): v for t, a, v in ndoc["entries"]}, ndoc["idf"]
        )
        prepared = PreparedIndex(graph, F, N, TermDictionary(frozenset(doc["dictionary"])), doc["titles"])
        snap = IndexSnapshot(version, doc["corpus_digest"], IngestConfig(**doc["config"]), prepared)
    except (KeyError, TypeError, ValueError) as exc:
        raise SnapshotError(f"corrupt snapshot: {exc}") from None
    _check_weighting(F, N)
    return snap


def _check_weighting(F: TermDocumentMatrix, N: WeightedTermDocumentMatrix) -> None:
    derived = weight_matrix(F)
    if derived.terms != N.terms or set(derived.entries) != set(N.entries):
        raise SnapshotError("stored weighted matrix does not match its term-document matrix")
    for key, v in derived.entries.items():
        if not math.isclose(v, N.entries[key], rel_tol=0.0, abs_tol=1e-12):
            raise SnapshotError(f"stored weighted entry {key} differs from re-derived value")


def save_snapshot(snapshot: IndexSnapshot, path) -> None:
    Path(path).write_text(to_json(snapshot), encoding="utf-8")


def load_snapshot(path) -> IndexSnapshot:
    return from_json(Path(path).read_text(encoding="utf-8"))
