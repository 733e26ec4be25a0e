"""Synthetic corpora for experiments and tests.

``hadoop_corpus`` plants a ground truth: foundational articles that never
mention the query term in their own records but are cited with it by many
later articles. ``random_corpus`` produces unstructured corpora for property
checks.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

FILLER = ("we", "follow", "the", "approach", "of", "as", "described", "in", "see", "also", "recent", "work")


def toy_corpus_path() -> Path:
    return Path(str(resources.files("citerank") / "data" / "toy_corpus.jsonl"))


def to_lines(records) -> list[str]:
    return [json.dumps(r, ensure_ascii=False, sort_keys=True) for r in records]


def write_jsonl(records, path) -> None:
    Path(path).write_text("\n".join(to_lines(records)) + "\n", encoding="utf-8")


def article(aid, title, keywords):
    return {"kind": "article", "id": aid, "title": title, "keywords": list(keywords)}


def citation(source, target, before, after="", marker=None):
    marker = marker or f"[{target}]"
    context = f"{before} {marker} {after}".strip()
    return {"kind": "citation", "source": source, "target": target,
            "context": context, "marker_offset": len(before) + 1}


@dataclass(frozen=True)
class PlantedCorpus:
    records: list
    term: str
    foundational: str
    runner_up: str
    involved: frozenset


def hadoop_corpus(n_articles: int = 200, n_citers: int = 12, seed: int = 0) -> PlantedCorpus:
    """A corpus where ``found`` is cited with "hadoop" by every one of ``n_citers`` articles.

    ``found`` and ``runner`` carry no "hadoop" keyword or title word. Every
    other article is background: it cites at random with unrelated terms.
    """
    if n_citers < 10:
        raise ValueError("need at least 10 citing articles")
    rng = random.Random(seed)
    records = [
        article("found", "Simplified data processing on large clusters", ["mapreduce", "distributed computing"]),
        article("runner", "A scalable distributed file system", ["file system", "distributed storage"]),
    ]
    citers = [f"h{k:03d}" for k in range(n_citers)]
    for c in citers:
        records.append(article(c, f"Cluster analytics study {c}", ["hadoop", "cloud computing"]))
    background_topics = ["power law", "small world", "web graph", "neural network", "query expansion",
                         "peer to peer", "sensor network", "graph mining", "link analysis", "data cleaning"]
    background = [f"b{k:03d}" for k in range(n_articles - 2 - n_citers)]
    for b in background:
        records.append(article(b, f"Background article {b}", rng.sample(background_topics, 2)))

    for k, c in enumerate(citers):
        records.append(citation(c, "found", "our system runs on hadoop using the programming model of",
                                "for batch jobs"))
        if k % 2 == 0:
            records.append(citation(c, "runner", "hadoop stores its blocks in a design derived from",
                                    "with replication"))
        if k and k % 3 == 0:
            records.append(citation(c, citers[k - 1], "an earlier hadoop deployment is reported in"))

    for b in background:
        for target in rng.sample(background, 3):
            if target == b:
                continue
            topic = rng.choice(background_topics)
            records.append(citation(b, target, f"{topic} results were obtained by"))
        if rng.random() < 0.2:
            # foundational work is also cited outside the query topic
            records.append(citation(b, "found", "distributed computing frameworks such as"))

    rng.shuffle(records)
    involved = frozenset(citers) | {"found", "runner"}
    return PlantedCorpus(records, "hadoop", "found", "runner", involved)


def random_corpus(seed: int, n_articles: int = 30, n_terms: int = 8, n_citations: int = 80,
                  max_terms_per_context: int = 3) -> list:
    rng = random.Random(seed)
    vocab = [f"term{k}" for k in range(n_terms)]
    ids = [f"r{k:03d}" for k in range(n_articles)]
    records = [article(a, f"Random article {a}", rng.sample(vocab, rng.randint(0, 2))) for a in ids]
    # make sure every term is in the dictionary
    records.append(article("vocab", "Vocabulary holder", vocab))
    for _ in range(n_citations):
        src, dst = rng.sample(ids, 2)
        words = rng.sample(vocab, rng.randint(0, max_terms_per_context))
        words += rng.sample(FILLER, 2)
        rng.shuffle(words)
        records.append(citation(src, dst, " ".join(words)))
    return records
