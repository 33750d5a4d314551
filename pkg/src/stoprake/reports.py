"""Corpus-level keyword tables and CSV exports."""

from __future__ import annotations

import csv
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .corpus import Corpus, Document, TokenizerConfig, tokenize
from .rake import extract_candidates, extract_keywords
from .stoplist import Stoplist
from .termstats import (
    NEGBIN,
    POISSON,
    OccurrenceModel,
    TermStatsTable,
    expected_df,
    model_curve,
)

log = logging.getLogger(__name__)

DOCUMENTS = "documents"
OCCURRENCES = "occurrences"


@dataclass(frozen=True)
class KeywordFrequencyRow:
    normal: str
    surface: str
    doc_count: int
    token_count: int


def _document_phrases(doc: Document, stoplist, config, count, max_phrase_len):
    """(normal, surface, token_count) per counted unit of one document."""
    if count == DOCUMENTS:
        return [
            (k.normal, k.surface, k.token_count)
            for k in extract_keywords(doc, stoplist, config, max_phrase_len=max_phrase_len)
        ]
    cands = extract_candidates(tokenize(doc.text, config), stoplist, doc.doc_id)
    return [
        (c.normal, c.surface, len(c))
        for c in cands
        if max_phrase_len is None or len(c) <= max_phrase_len
    ]


def _phrases_chunk(args):
    docs, stoplist, config, count, max_phrase_len = args
    out = []
    for doc in docs:
        try:
            out.append(_document_phrases(doc, stoplist, config, count, max_phrase_len))
        except Exception as e:  # keep aggregating, the failure is reported
            out.append(e)
    return out


def corpus_keyword_frequencies(
    corpus: Corpus,
    stoplist: Stoplist,
    tokenizer_config: TokenizerConfig | None = None,
    count: str = DOCUMENTS,
    max_phrase_len: int | None = None,
    workers: int = 1,
) -> list[KeywordFrequencyRow]:
    """Rank keyword phrases by how many documents they were extracted from.

    With ``count="occurrences"`` every candidate occurrence is counted
    instead, and ``doc_count`` holds that total.
    """
    if count not in (DOCUMENTS, OCCURRENCES):
        raise ValueError(f"count must be {DOCUMENTS!r} or {OCCURRENCES!r}")
    docs = list(corpus)
    if workers > 1 and len(docs) > 1:
        size = -(-len(docs) // workers)
        jobs = [
            (docs[i : i + size], stoplist, tokenizer_config, count, max_phrase_len)
            for i in range(0, len(docs), size)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_doc = [r for chunk in pool.map(_phrases_chunk, jobs) for r in chunk]
    else:
        per_doc = _phrases_chunk((docs, stoplist, tokenizer_config, count, max_phrase_len))

    totals: Counter[str] = Counter()
    variants: dict[str, Counter[str]] = {}
    tokens: dict[str, int] = {}
    for doc, phrases in zip(docs, per_doc):
        if isinstance(phrases, Exception):
            log.warning("skipping %s during aggregation: %s", doc.doc_id, phrases)
            continue
        for normal, surface, n in phrases:
            totals[normal] += 1
            # Counter keeps insertion order, so max() below breaks ties by first seen
            variants.setdefault(normal, Counter())[surface] += 1
            tokens[normal] = n

    rows = []
    for normal, total in totals.items():
        v = variants[normal]
        top = max(v.values())
        surface = next(s for s, c in v.items() if c == top)
        rows.append(KeywordFrequencyRow(normal, surface, total, tokens[normal]))
    rows.sort(key=lambda r: (-r.doc_count, r.normal))
    return rows


def filter_by_token_count(rows: Iterable[KeywordFrequencyRow], n: int) -> list[KeywordFrequencyRow]:
    if n < 1:
        raise ValueError("token count must be at least 1")
    return [r for r in rows if r.token_count == n]


# -- CSV --------------------------------------------------------------------


def _writer(f):
    return csv.writer(f, lineterminator="\n")


def _open_out(path):
    try:
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as e:
        raise OSError(e.errno, f"cannot write {path}: {e.strerror}") from e


def fmt_float(x: float) -> str:
    return repr(float(x))


def write_stats_csv(stats: TermStatsTable, f):
    w = _writer(f)
    w.writerow(["word", "cf", "df"])
    for e in stats.sorted_entries():
        w.writerow([e.word, e.cf, e.df])


def _by_kind(models: list[OccurrenceModel], N: int) -> dict[str, OccurrenceModel]:
    out = {}
    for m in models:
        if m.N != N:
            raise ValueError(f"model {m.describe()} does not match N={N}")
        if m.kind in out:
            raise ValueError(f"more than one {m.kind} model given")
        out[m.kind] = m
    return out


def write_curve_csv(models: list[OccurrenceModel], max_cf: float, f, points: int = 200):
    by_kind = _by_kind(models, models[0].N) if models else {}
    kinds = [k for k in (POISSON, NEGBIN) if k in by_kind]
    ordered = [by_kind[k] for k in kinds]
    cf, curves = model_curve(ordered, max_cf, points)
    w = _writer(f)
    w.writerow(["cf"] + [f"df_{k}" for k in kinds])
    for i, x in enumerate(cf):
        w.writerow([fmt_float(x)] + [fmt_float(c[i]) for c in curves])


def write_scatter_csv(stats: TermStatsTable, models: list[OccurrenceModel], f):
    by_kind = _by_kind(models, stats.N)
    header = ["word", "cf", "df"]
    if POISSON in by_kind:
        header.append("df_poisson")
    if NEGBIN in by_kind:
        header += ["df_negbin", "ratio_negbin"]
    w = _writer(f)
    w.writerow(header)
    for e in stats.sorted_entries():
        row = [e.word, e.cf, e.df]
        if POISSON in by_kind:
            row.append(fmt_float(expected_df(by_kind[POISSON], e.cf)))
        if NEGBIN in by_kind:
            nb = expected_df(by_kind[NEGBIN], e.cf)
            row += [fmt_float(nb), fmt_float(nb / e.df)]
        w.writerow(row)


def export_scatter(
    stats: TermStatsTable,
    models: list[OccurrenceModel],
    path: str | os.PathLike,
    curve_path: str | os.PathLike | None = None,
):
    """Write the per-word df-vs-cf scatter plus the dense model curves.

    The curves go to ``curve_path``, by default next to ``path`` with a
    ``.curves.csv`` suffix. Without models only the scatter is written.
    """
    with _open_out(path) as f:
        write_scatter_csv(stats, models, f)
    if models:
        if curve_path is None:
            p = os.fspath(path)
            curve_path = (p[:-4] if p.endswith(".csv") else p) + ".curves.csv"
        max_cf = max((e.cf for e in stats), default=1)
        with _open_out(curve_path) as f:
            write_curve_csv(models, max_cf, f)
