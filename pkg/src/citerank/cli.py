"""Command-line front end.

Exit codes: 0 ok, 1 I/O or parse error, 2 term/article not found,
3 snapshot format version mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .corpus import CorpusError, IngestConfig, read_corpus
from .query import (
    NoCitationEvidenceError,
    QueryConfig,
    UnknownTermError,
    rank_for_term,
    report_network_stats,
    resolve_term,
)
from .ranking import ALGORITHMS, RankConfig
from .snapshot import SnapshotError, SnapshotVersionError, build_snapshot, load_snapshot, save_snapshot
from .terms import descriptive_terms, similar_terms

log = logging.getLogger("citerank")

EXIT_OK, EXIT_IO, EXIT_NOT_FOUND, EXIT_VERSION = 0, 1, 2, 3


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--index", help="snapshot path")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--quiet", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="citerank", description="Context-sensitive citation ranking.")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="ingest a corpus and write a snapshot")
    b.add_argument("corpus")
    b.add_argument("--out", help="snapshot path (defaults to --index)")
    b.add_argument("--window-chars", type=int, default=400)
    b.add_argument("--term-max-words", type=int, default=2)
    b.add_argument("--longest-match-only", action="store_true")

    q = sub.add_parser("query", aliases=["rank"], parents=[common], help="rank articles for a term")
    q.add_argument("--term", required=True)
    q.add_argument("--delta", type=float, default=0.35)
    q.add_argument("--no-similar", action="store_true")
    q.add_argument("--top-k", type=int, default=10)
    q.add_argument("--algorithms", default=",".join(ALGORITHMS))
    q.add_argument("--damping", type=float, default=0.85)
    q.add_argument("--tolerance", type=float, default=1e-9)
    q.add_argument("--max-iters", type=int, default=100)
    q.add_argument("--emit-hubs", action="store_true")

    s = sub.add_parser("similar-terms", parents=[common], help="list terms similar to a term")
    s.add_argument("--term", required=True)
    s.add_argument("--delta", type=float, default=0.35)

    d = sub.add_parser("describe", parents=[common], help="most descriptive terms of an article")
    d.add_argument("--article", required=True)
    d.add_argument("-k", "--k", type=int, default=10)

    st = sub.add_parser("stats", parents=[common], help="index or query network statistics")
    st.add_argument("--term")
    st.add_argument("--delta", type=float, default=0.35)
    st.add_argument("--no-similar", action="store_true")
    return parser


def _emit_json(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False, indent=2))


def format_query_tsv(result, titles) -> str:
    lines = []
    for algorithm, ranking in result.rankings.items():
        lines.append(f"# {algorithm}")
        for rank, (aid, score) in enumerate(ranking.entries, start=1):
            lines.append(f"{rank}\t{aid}\t{titles.get(aid, '')}\t{score:.6f}")
    return "\n".join(lines)


def cmd_build(args) -> int:
    out = args.out or args.index
    if not out:
        log.error("build needs --out or --index")
        return EXIT_IO
    config = IngestConfig(args.window_chars, args.term_max_words, args.longest_match_only)
    index = read_corpus(args.corpus, config)
    if not index.articles:
        log.warning("corpus %s is empty", args.corpus)
    snapshot = build_snapshot(index, config)
    save_snapshot(snapshot, out)
    p = snapshot.prepared
    summary = {
        "articles": len(p.graph.nodes),
        "arcs": len(p.graph.arcs),
        "terms": len(p.dictionary),
        "cited_terms": len(p.matrix_N.terms),
        "self_citations_skipped": index.self_citations_skipped,
        "corpus_digest": snapshot.corpus_digest,
    }
    if not args.quiet:
        if args.format == "json":
            _emit_json(summary)
        else:
            print("\n".join(f"{k}\t{v}" for k, v in summary.items()))
    return EXIT_OK


def _load(args):
    if not args.index:
        raise SnapshotError("--index is required")
    return load_snapshot(args.index)


def cmd_query(args) -> int:
    snap = _load(args)
    config = QueryConfig(
        delta=args.delta,
        use_similar_terms=not args.no_similar,
        rank_config=RankConfig(args.damping, args.max_iters, args.tolerance),
        algorithms=tuple(a.strip() for a in args.algorithms.split(",") if a.strip()),
        top_k=args.top_k,
        emit_hubs=args.emit_hubs,
    )
    result = rank_for_term(snap.prepared, args.term, config)
    if args.format == "json":
        _emit_json(result.to_dict())
    else:
        print(format_query_tsv(result, snap.prepared.titles))
    return EXIT_OK


def cmd_similar(args) -> int:
    snap = _load(args)
    term = resolve_term(snap.prepared, args.term)
    result = similar_terms(snap.matrix_N, term, args.delta)
    if args.format == "json":
        _emit_json({"query_term": term, "threshold": args.delta,
                    "scores": [[t, round(s, 4)] for t, s in result.scores.items()]})
    else:
        print("\n".join(f"{t}\t{s:.4f}" for t, s in result.scores.items()))
    return EXIT_OK


def cmd_describe(args) -> int:
    snap = _load(args)
    if args.article not in snap.matrix_N.articles:
        log.error("unknown article %r", args.article)
        return EXIT_NOT_FOUND
    rows = descriptive_terms(snap.matrix_N, args.article, args.k)
    if args.format == "json":
        _emit_json({"article": args.article, "terms": [[t, round(v, 6)] for t, v in rows]})
    elif rows:
        print("\n".join(f"{t}\t{v:.6f}" for t, v in rows))
    return EXIT_OK


def cmd_stats(args) -> int:
    snap = _load(args)
    if args.term:
        result = rank_for_term(
            snap.prepared, args.term,
            QueryConfig(delta=args.delta, use_similar_terms=not args.no_similar, algorithms=("indegree",)),
        )
        stats = report_network_stats(result)
        summary = {"query_term": result.query_term, "nodes": stats.nodes, "arcs": stats.arcs,
                   "term_nodes": stats.term_nodes, "term_arcs": stats.term_arcs,
                   "enrichment_delta": stats.enrichment_delta}
    else:
        p = snap.prepared
        summary = {"articles": len(p.graph.nodes), "arcs": len(p.graph.arcs),
                   "terms": len(p.dictionary), "cited_terms": len(p.matrix_N.terms),
                   "corpus_digest": snap.corpus_digest}
    if args.format == "json":
        _emit_json(summary)
    else:
        print("\n".join(f"{k}\t{v}" for k, v in summary.items()))
    return EXIT_OK


COMMANDS = {"build": cmd_build, "query": cmd_query, "rank": cmd_query,
            "similar-terms": cmd_similar, "describe": cmd_describe, "stats": cmd_stats}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING,
                        format="citerank: %(levelname)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except SnapshotVersionError as exc:
        log.error("%s", exc)
        return EXIT_VERSION
    except UnknownTermError as exc:
        log.error("%s", exc)
        return EXIT_NOT_FOUND
    except NoCitationEvidenceError as exc:
        log.error("%s", exc)
        return EXIT_NOT_FOUND
    except (CorpusError, SnapshotError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
