"""RAKE candidate extraction and scoring.

Candidates are maximal runs of words that are neither stopwords nor broken
by a delimiter. Adjoining candidates are never merged. Within a document,
each word gets ``freq`` (how often it occurs inside candidates) and ``deg``
(summed length of the candidates it occurs in), and a phrase scores the sum
of ``deg / freq`` over its words.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .corpus import Document, TokenizerConfig, TokenStream, Word, tokenize
from .stoplist import Stoplist


@dataclass(frozen=True)
class CandidatePhrase:
    words: tuple[Word, ...]
    doc_id: str | None
    position: int

    @property
    def normal(self) -> str:
        return " ".join(w.normal for w in self.words)

    @property
    def surface(self) -> str:
        return " ".join(w.surface for w in self.words)

    def __len__(self):
        return len(self.words)


@dataclass
class CooccurrenceGraph:
    freq: Counter
    deg: Counter

    def word_score(self, word: str) -> float:
        return self.deg[word] / self.freq[word]


@dataclass(frozen=True)
class ScoredKeyword:
    surface: str
    normal: str
    score: float
    token_count: int


def extract_candidates(
    stream: TokenStream, stoplist: Stoplist, doc_id: str | None = None
) -> list[CandidatePhrase]:
    stop = stoplist.words
    out: list[CandidatePhrase] = []
    run: list[Word] = []
    start = 0
    for i, item in enumerate(stream.items):
        if isinstance(item, Word) and item.normal not in stop:
            if not run:
                start = i
            run.append(item)
        elif run:
            out.append(CandidatePhrase(tuple(run), doc_id, start))
            run = []
    if run:
        out.append(CandidatePhrase(tuple(run), doc_id, start))
    return out


def build_graph(candidates: list[CandidatePhrase]) -> CooccurrenceGraph:
    freq: Counter = Counter()
    deg: Counter = Counter()
    for cand in candidates:
        n = len(cand.words)
        for w in cand.words:
            freq[w.normal] += 1
            deg[w.normal] += n
    return CooccurrenceGraph(freq, deg)


def score_keywords(
    candidates: list[CandidatePhrase], graph: CooccurrenceGraph
) -> list[ScoredKeyword]:
    """One keyword per distinct normalized phrase, best first.

    The surface form is taken from the first occurrence; ties in score are
    broken by the normalized phrase.
    """
    seen: dict[str, ScoredKeyword] = {}
    for cand in candidates:
        key = cand.normal
        if key in seen:
            continue
        score = sum(graph.word_score(w.normal) for w in cand.words)
        seen[key] = ScoredKeyword(cand.surface, key, score, len(cand.words))
    return sorted(seen.values(), key=lambda k: (-k.score, k.normal))


def extract_keywords(
    doc: Document,
    stoplist: Stoplist,
    tokenizer_config: TokenizerConfig | None = None,
    top_k: int | None = None,
    max_phrase_len: int | None = None,
) -> list[ScoredKeyword]:
    """Score all keywords of a single document.

    ``max_phrase_len`` drops longer phrases from the output only; they still
    contribute to the co-occurrence graph of the document.
    """
    stream = tokenize(doc.text, tokenizer_config)
    candidates = extract_candidates(stream, stoplist, doc.doc_id)
    keywords = score_keywords(candidates, build_graph(candidates))
    if max_phrase_len is not None:
        keywords = [k for k in keywords if k.token_count <= max_phrase_len]
    if top_k is not None:
        keywords = keywords[:top_k]
    return keywords
