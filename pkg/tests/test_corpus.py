import io
import json

import pytest
from hypothesis import given, strategies as st

from citerank.corpus import (
    ArticleRecord,
    CorpusError,
    IngestConfig,
    TermDictionary,
    build_term_dictionary,
    extract_window,
    identify_terms,
    normalize,
    parse_corpus,
)
from citerank.synthetic import random_corpus, to_lines


def stream(*records):
    return io.BytesIO("\n".join(json.dumps(r) for r in records).encode("utf-8"))


def art(aid, keywords=(), title=""):
    return {"kind": "article", "id": aid, "title": title, "keywords": list(keywords)}


def cit(src, dst, context="x", offset=0):
    return {"kind": "citation", "source": src, "target": dst, "context": context, "marker_offset": offset}


def test_toy_corpus_has_six_articles(toy_index):
    assert sorted(toy_index.articles) == ["a1", "a2", "a3", "a4", "a5", "a6"]
    assert len(toy_index.citations) == 7


def test_empty_stream():
    index = parse_corpus(io.BytesIO(b""))
    assert len(index.articles) == 0
    assert index.citations == ()
    assert len(index.dictionary) == 0


def test_unresolved_target_becomes_stub():
    index = parse_corpus(stream(art("a1", ["x"]), cit("a1", "a9")))
    assert len(index.articles) == 2
    assert index.articles["a9"].keywords == ()


def test_comments_and_blank_lines_skipped():
    data = b"# header\n\n" + json.dumps(art("a1")).encode() + b"\n"
    assert list(parse_corpus(io.BytesIO(data)).articles) == ["a1"]


def test_self_citation_dropped_and_counted():
    index = parse_corpus(stream(art("a1"), cit("a1", "a1")))
    assert index.citations == ()
    assert index.self_citations_skipped == 1


@pytest.mark.parametrize(
    "line, field",
    [
        ('{"kind": "citation", "source": "", "target": "b", "context": "", "marker_offset": 0}', "source"),
        ('{"kind": "citation", "source": "a", "target": "b", "context": "ab", "marker_offset": 5}', "marker_offset"),
        ('{"kind": "citation", "source": "a", "target": "b", "context": "ab"}', "marker_offset"),
        ('{"kind": "article", "title": "no id"}', "id"),
        ('{"kind": "article", "id": "a", "keywords": "oops"}', "keywords"),
        ('{"kind": "banana"}', "kind"),
    ],
)
def test_malformed_line_names_line_and_field(line, field):
    data = json.dumps(art("a0")) + "\n" + line + "\n"
    with pytest.raises(CorpusError) as err:
        parse_corpus(io.StringIO(data))
    assert err.value.line == 2
    assert err.value.field_name == field
    assert "line 2" in str(err.value)


def test_invalid_json_reports_line():
    with pytest.raises(CorpusError, match="line 1"):
        parse_corpus(io.BytesIO(b"{not json\n"))


def test_duplicate_article_id():
    with pytest.raises(CorpusError, match="duplicate"):
        parse_corpus(stream(art("a1"), art("a1")))


@given(st.randoms(use_true_random=False), st.integers(0, 10_000))
def test_parse_is_order_independent(rnd, seed):
    lines = to_lines(random_corpus(seed, n_articles=10, n_citations=20))
    shuffled = list(lines)
    rnd.shuffle(shuffled)
    assert parse_corpus(lines) == parse_corpus(shuffled)


def test_dictionary_normalizes():
    d = build_term_dictionary([ArticleRecord("a", "", ("Power Law", "degree  distribution"))])
    assert d.terms == {"power law", "degree distribution"}


def test_dictionary_length_filter():
    d = build_term_dictionary([ArticleRecord("a", "", ("co-citation proximity analysis",))], IngestConfig(term_max_words=2))
    assert d.terms == frozenset()


def test_dictionary_set_semantics():
    d = build_term_dictionary([ArticleRecord("a", "", ("scale free",)), ArticleRecord("b", "", ("Scale-Free",))])
    assert d.terms == {"scale free"}


def test_normalize():
    assert normalize("  The Power-Law, (degree)  distribution! ") == "the power law degree distribution"


@pytest.mark.parametrize(
    "length, offset, window, expected",
    [(1000, 500, 400, (300, 700)), (100, 10, 400, (0, 100)), (1000, 0, 400, (0, 200)), (1000, 1000, 400, (800, 1000))],
)
def test_extract_window(length, offset, window, expected):
    text = "".join(chr(0x4E00 + k) for k in range(length))
    assert extract_window(text, offset, window) == text[expected[0]:expected[1]]


def test_extract_window_out_of_range():
    with pytest.raises(ValueError):
        extract_window("abc", 4, 10)


@given(st.text(max_size=300), st.data(), st.integers(2, 120))
def test_window_is_contiguous_and_contains_marker(text, data, window):
    offset = data.draw(st.integers(0, len(text)))
    out = extract_window(text, offset, window)
    assert len(out) <= window
    start = max(0, offset - window // 2)
    assert text[start:start + len(out)] == out
    assert start <= offset <= start + len(out)


DICT = TermDictionary(frozenset({"power law", "degree distribution", "law"}))


def test_identify_overlapping_terms():
    assert identify_terms("the power law degree distribution of", DICT) == {"power law", "degree distribution", "law"}


def test_identify_collapses_repeats():
    assert identify_terms("power law power law", TermDictionary(frozenset({"power law"}))) == {"power law"}


def test_identify_no_match():
    assert identify_terms("MapReduce cluster", TermDictionary(frozenset({"hadoop"}))) == set()
    assert identify_terms("", DICT) == set()


def test_identify_longest_match_only():
    cfg = IngestConfig(longest_match_only=True)
    assert identify_terms("the power law degree distribution", DICT, cfg) == {"power law", "degree distribution"}
    assert identify_terms("a law", DICT, cfg) == {"law"}


words = st.lists(st.sampled_from(["power", "law", "degree", "distribution", "the", "of", "scale", "free"]), max_size=15)
vocab = TermDictionary(frozenset({"power law", "law", "scale free", "degree", "of the"}))


@given(words)
def test_identify_subset_of_dictionary(ws):
    assert identify_terms(" ".join(ws), vocab) <= vocab.terms


@given(words)
def test_repeating_window_adds_nothing_for_unigrams(ws):
    cfg = IngestConfig(term_max_words=1)
    text = " ".join(ws)
    assert identify_terms(text + " " + text, vocab, cfg) == identify_terms(text, vocab, cfg)


@given(words)
def test_repeating_window_adds_only_the_seam_bigram(ws):
    # doubling can create exactly one new bigram: last word + first word
    text = " ".join(ws)
    found = identify_terms(text, vocab)
    doubled = identify_terms(text + " " + text, vocab)
    seam = {f"{ws[-1]} {ws[0]}"} & vocab.terms if ws else set()
    assert doubled == found | seam
