"""In-degree, HITS and PageRank over weighted citation graphs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import WeightedCitationGraph

ALGORITHMS = ("indegree", "hits", "pagerank")


@dataclass(frozen=True)
class RankConfig:
    damping: float = 0.85
    max_iterations: int = 100
    tolerance: float = 1e-9

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise ValueError("damping must lie strictly inside (0, 1)")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass(frozen=True)
class RankingResult:
    algorithm: str
    entries: tuple[tuple[str, float], ...]
    iterations_used: int = 0
    converged: bool = True

    def scores(self) -> dict[str, float]:
        return dict(self.entries)

    def top(self, k: int) -> RankingResult:
        return RankingResult(self.algorithm, self.entries[:k], self.iterations_used, self.converged)

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "entries": [[a, s] for a, s in self.entries],
            "iterations_used": self.iterations_used,
            "converged": self.converged,
        }


class NoLinkStructure(ValueError):
    pass


def _result(algorithm, nodes, scores, iterations=0, converged=True) -> RankingResult:
    # round the sort key so float noise between symmetric nodes cannot reorder ties
    order = sorted(range(len(nodes)), key=lambda k: (-round(float(scores[k]), 12), nodes[k]))
    entries = tuple((nodes[k], float(scores[k])) for k in order)
    return RankingResult(algorithm, entries, iterations, converged)


def _arrays(graph: WeightedCitationGraph):
    nodes = tuple(sorted(graph.nodes))
    pos = {n: k for k, n in enumerate(nodes)}
    arcs = sorted(graph.arcs.items())
    src = np.fromiter((pos[i] for (i, _), _ in arcs), dtype=np.intp, count=len(arcs))
    dst = np.fromiter((pos[j] for (_, j), _ in arcs), dtype=np.intp, count=len(arcs))
    w = np.fromiter((w for _, w in arcs), dtype=float, count=len(arcs))
    return nodes, src, dst, w


def indegree_rank(graph: WeightedCitationGraph) -> RankingResult:
    nodes, src, dst, w = _arrays(graph)
    scores = np.bincount(dst, weights=w, minlength=len(nodes))
    return _result("indegree", nodes, scores)


def hits(graph: WeightedCitationGraph, config: RankConfig = RankConfig()) -> tuple[RankingResult, RankingResult]:
    """Weighted HITS; returns (authority, hub) with unit Euclidean norm."""
    if not graph.arcs:
        raise NoLinkStructure("no link structure: graph has no arcs")
    nodes, src, dst, w = _arrays(graph)
    n = len(nodes)
    auth = np.full(n, 1.0 / np.sqrt(n))
    hub = auth.copy()
    converged = False
    it = 0
    for it in range(1, config.max_iterations + 1):
        new_auth = np.bincount(dst, weights=w * hub[src], minlength=n)
        new_auth /= np.linalg.norm(new_auth)
        new_hub = np.bincount(src, weights=w * new_auth[dst], minlength=n)
        new_hub /= np.linalg.norm(new_hub)
        change = np.abs(new_auth - auth).sum() + np.abs(new_hub - hub).sum()
        auth, hub = new_auth, new_hub
        if change < config.tolerance:
            converged = True
            break
    return (
        _result("hits_authority", nodes, auth, it, converged),
        _result("hits_hub", nodes, hub, it, converged),
    )


def pagerank(graph: WeightedCitationGraph, config: RankConfig = RankConfig()) -> RankingResult:
    """Power-iteration PageRank with weight-proportional transitions.

    Dangling nodes (no outgoing weight) spread their mass uniformly.
    """
    nodes, src, dst, w = _arrays(graph)
    n = len(nodes)
    if n == 0:
        return RankingResult("pagerank", ())
    d = config.damping
    out_weight = np.bincount(src, weights=w, minlength=n)
    dangling = out_weight == 0
    share = w / out_weight[src] if len(w) else w
    rank = np.full(n, 1.0 / n)
    converged = False
    it = 0
    for it in range(1, config.max_iterations + 1):
        flow = np.bincount(dst, weights=rank[src] * share, minlength=n)
        new = (1.0 - d) / n + d * (flow + rank[dangling].sum() / n)
        new /= new.sum()
        change = np.abs(new - rank).sum()
        rank = new
        if change < config.tolerance:
            converged = True
            break
    return _result("pagerank", nodes, rank, it, converged)
