"""Corpus ingestion: record parsing, term dictionary, citation-context windows.

The corpus is a UTF-8 line-delimited file with one JSON object per line.
Two record kinds are recognised::

    {"kind": "article", "id": "a1", "title": "...", "keywords": ["power law"]}
    {"kind": "citation", "source": "a1", "target": "a4",
     "context": "... [4] ...", "marker_offset": 17}

Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from typing import IO, Iterable, Mapping

log = logging.getLogger(__name__)

_PUNCT = re.compile(r"[^\w\s]|_")


class CorpusError(ValueError):
    """Raised for malformed corpus input."""

    def __init__(self, message: str, line: int | None = None, field_name: str | None = None):
        self.line = line
        self.field_name = field_name
        where = f"line {line}: " if line is not None else ""
        if field_name:
            where += f"field '{field_name}': "
        super().__init__(where + message)


@dataclass(frozen=True)
class IngestConfig:
    window_chars: int = 400
    term_max_words: int = 2
    longest_match_only: bool = False

    def __post_init__(self):
        if self.window_chars < 2:
            raise ValueError("window_chars must be >= 2")
        if self.term_max_words < 1:
            raise ValueError("term_max_words must be >= 1")


@dataclass(frozen=True)
class ArticleRecord:
    article_id: str
    title: str = ""
    keywords: tuple[str, ...] = ()

    @property
    def is_stub(self) -> bool:
        return not self.title and not self.keywords


@dataclass(frozen=True, order=True)
class CitationRecord:
    source_id: str
    target_id: str
    context_text: str
    marker_offset: int

    def __post_init__(self):
        if self.source_id == self.target_id:
            raise ValueError(f"self-citation {self.source_id!r}")
        if not 0 <= self.marker_offset <= len(self.context_text):
            raise ValueError(
                f"marker_offset {self.marker_offset} outside context of length {len(self.context_text)}"
            )


@dataclass(frozen=True)
class TermDictionary:
    terms: frozenset[str] = frozenset()

    def __contains__(self, term: str) -> bool:
        return term in self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms))

    def suggest(self, term: str, limit: int = 5) -> list[str]:
        """Dictionary entries sharing a prefix with ``term``, longest shared prefix first."""
        term = normalize(term)
        for cut in range(len(term), 0, -1):
            prefix = term[:cut]
            hits = sorted(t for t in self.terms if t.startswith(prefix))
            if hits:
                return hits[:limit]
        return []


@dataclass(frozen=True)
class CorpusIndex:
    articles: Mapping[str, ArticleRecord] = field(default_factory=dict)
    citations: tuple[CitationRecord, ...] = ()
    dictionary: TermDictionary = field(default_factory=TermDictionary)
    self_citations_skipped: int = 0


def normalize(text: str) -> str:
    """Lowercase, turn punctuation into spaces and collapse whitespace."""
    return " ".join(_PUNCT.sub(" ", text.lower()).split())


def build_term_dictionary(articles: Iterable[ArticleRecord], config: IngestConfig = IngestConfig()) -> TermDictionary:
    terms = set()
    for article in articles:
        for keyword in article.keywords:
            term = normalize(keyword)
            if term and len(term.split()) <= config.term_max_words:
                terms.add(term)
    return TermDictionary(frozenset(terms))


def extract_window(context_text: str, marker_offset: int, window_chars: int) -> str:
    """Return up to ``window_chars`` characters split evenly around the marker."""
    if not 0 <= marker_offset <= len(context_text):
        raise ValueError(f"marker_offset {marker_offset} out of range for text of length {len(context_text)}")
    left = window_chars // 2
    right = window_chars - left
    start = max(0, marker_offset - left)
    end = min(len(context_text), marker_offset + right)
    return context_text[start:end]


def identify_terms(window: str, dictionary: TermDictionary, config: IngestConfig = IngestConfig()) -> set[str]:
    """Set of dictionary terms occurring as word n-grams (n <= term_max_words) in ``window``."""
    words = normalize(window).split()
    found = set()
    if config.longest_match_only:
        i = 0
        while i < len(words):
            for n in range(min(config.term_max_words, len(words) - i), 0, -1):
                gram = " ".join(words[i:i + n])
                if gram in dictionary:
                    found.add(gram)
                    i += n
                    break
            else:
                i += 1
        return found
    for n in range(1, config.term_max_words + 1):
        for i in range(len(words) - n + 1):
            gram = " ".join(words[i:i + n])
            if gram in dictionary:
                found.add(gram)
    return found


def _require(obj: dict, name: str, kind: type, lineno: int, allow_empty: bool = False):
    if name not in obj:
        raise CorpusError("missing", lineno, name)
    value = obj[name]
    if kind is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
    else:
        ok = isinstance(value, kind)
    if not ok:
        raise CorpusError(f"expected {kind.__name__}, got {type(value).__name__}", lineno, name)
    if kind is str and not allow_empty and not value.strip():
        raise CorpusError("must not be empty", lineno, name)
    return value


def parse_corpus(stream: IO[bytes] | IO[str] | Iterable[bytes | str], config: IngestConfig = IngestConfig()) -> CorpusIndex:
    """Parse a line-delimited corpus into a :class:`CorpusIndex`.

    Citation endpoints without an article record become stub articles.
    Self-citations are dropped and counted. The result is canonical: record
    order in the input does not affect it.
    """
    articles: dict[str, ArticleRecord] = {}
    citations: list[CitationRecord] = []
    skipped = 0

    for lineno, raw in enumerate(stream, start=1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise CorpusError(f"invalid UTF-8 ({exc.reason})", lineno) from None
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"invalid JSON: {exc.msg}", lineno) from None
        if not isinstance(obj, dict):
            raise CorpusError("record must be a JSON object", lineno)
        kind = obj.get("kind")

        if kind == "article":
            article_id = _require(obj, "id", str, lineno)
            title = obj.get("title", "")
            if not isinstance(title, str):
                raise CorpusError("expected str", lineno, "title")
            keywords = obj.get("keywords", [])
            if not isinstance(keywords, list) or not all(isinstance(k, str) for k in keywords):
                raise CorpusError("expected list of strings", lineno, "keywords")
            if article_id in articles:
                raise CorpusError(f"duplicate article id {article_id!r}", lineno, "id")
            articles[article_id] = ArticleRecord(article_id, title, tuple(k for k in keywords if normalize(k)))
        elif kind == "citation":
            source = _require(obj, "source", str, lineno)
            target = _require(obj, "target", str, lineno)
            context = _require(obj, "context", str, lineno, allow_empty=True)
            offset = _require(obj, "marker_offset", int, lineno)
            if not 0 <= offset <= len(context):
                raise CorpusError(f"{offset} outside context of length {len(context)}", lineno, "marker_offset")
            if source == target:
                skipped += 1
                continue
            citations.append(CitationRecord(source, target, context, offset))
        else:
            raise CorpusError(f"unknown record kind {kind!r}", lineno, "kind")

    for citation in citations:
        for endpoint in (citation.source_id, citation.target_id):
            if endpoint not in articles:
                articles[endpoint] = ArticleRecord(endpoint)
    if skipped:
        log.warning("skipped %d self-citation(s)", skipped)

    ordered = {k: articles[k] for k in sorted(articles)}
    return CorpusIndex(
        articles=ordered,
        citations=tuple(sorted(citations)),
        dictionary=build_term_dictionary(ordered.values(), config),
        self_citations_skipped=skipped,
    )


def read_corpus(path, config: IngestConfig = IngestConfig()) -> CorpusIndex:
    with open(path, "rb") as fh:
        return parse_corpus(fh, config)
