"""Corpus-derived stoplists and their on-disk format.

A stoplist file is one normalized word per line, UTF-8, sorted, LF line
endings. Generated lists carry a ``#`` comment header recording how they
were produced; any other tools can ignore those lines.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import normalize
from .termstats import OccurrenceModel, TermStatsTable, randomness_ratio

DEFAULT_THRESHOLD = 1.6
DEFAULT_MIN_DF = 11

_HEADER_TAG = "stoprake stoplist"


class StoplistFormatError(ValueError):
    pass


@dataclass(frozen=True)
class StoplistConfig:
    threshold: float = DEFAULT_THRESHOLD
    min_df: int = DEFAULT_MIN_DF

    def __post_init__(self):
        if not self.threshold > 0:
            raise ValueError(f"threshold must be positive, got {self.threshold!r}")
        if self.min_df < 1:
            raise ValueError(f"min_df must be at least 1, got {self.min_df!r}")


@dataclass(frozen=True)
class Provenance:
    threshold: float
    min_df: int
    model: str
    n_docs: int
    vocabulary: int


@dataclass(frozen=True)
class Stoplist:
    words: frozenset[str]
    provenance: Provenance | None = None
    # filled in by load_stoplist
    duplicates_collapsed: int = field(default=0, compare=False)

    @property
    def external(self) -> bool:
        return self.provenance is None

    def __contains__(self, word):
        return word in self.words

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words))

    @classmethod
    def of(cls, words) -> "Stoplist":
        """External stoplist from an iterable of words (normalized on the way in)."""
        return cls(frozenset(normalize(w) for w in words))

    @classmethod
    def empty(cls) -> "Stoplist":
        return cls(frozenset())


def generate_stoplist(
    stats: TermStatsTable, model: OccurrenceModel, config: StoplistConfig | None = None
) -> Stoplist:
    """Words whose df is close enough to the random-occurrence prediction.

    A word is kept when ``expected_df / df < threshold`` and ``df >= min_df``.
    """
    config = config or StoplistConfig()
    if model.N != stats.N:
        raise ValueError(f"model was built for N={model.N}, statistics have N={stats.N}")
    words = frozenset(
        e.word
        for e in stats
        if e.df >= config.min_df and randomness_ratio(e, model) < config.threshold
    )
    prov = Provenance(config.threshold, config.min_df, model.describe(), stats.N, len(stats))
    return Stoplist(words, prov)


def _header(p: Provenance, count: int) -> list[str]:
    return [
        f"# {_HEADER_TAG}",
        f"# threshold: {p.threshold!r}",
        f"# min_df: {p.min_df}",
        f"# model: {p.model}",
        f"# corpus: N={p.n_docs} vocabulary={p.vocabulary}",
        f"# words: {count}",
    ]


def save_stoplist(stoplist: Stoplist, path: str | os.PathLike):
    lines = []
    if stoplist.provenance is not None:
        lines.extend(_header(stoplist.provenance, len(stoplist)))
    lines.extend(sorted(stoplist.words))
    data = "".join(line + "\n" for line in lines)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(data)
    except OSError as e:
        raise OSError(e.errno, f"cannot write stoplist {path}: {e.strerror}") from e


def _parse_header(comments: list[str], path) -> Provenance | None:
    if not comments or comments[0] != _HEADER_TAG:
        return None
    meta = {}
    for c in comments[1:]:
        key, sep, value = c.partition(":")
        if sep:
            meta[key.strip()] = value.strip()
    try:
        corpus = dict(kv.split("=", 1) for kv in meta["corpus"].split())
        return Provenance(
            threshold=float(meta["threshold"]),
            min_df=int(meta["min_df"]),
            model=meta["model"],
            n_docs=int(corpus["N"]),
            vocabulary=int(corpus["vocabulary"]),
        )
    except (KeyError, ValueError) as e:
        raise StoplistFormatError(f"{path}: malformed provenance header ({e})") from e


def load_stoplist(path: str | os.PathLike) -> Stoplist:
    """Read a stoplist file.

    Blank lines and ``#`` comments are ignored, words are lowercased and
    duplicates collapsed (their number is kept in ``duplicates_collapsed``).
    A line holding more than one whitespace-separated token is rejected.
    Files without a generator header load as external lists.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise OSError(e.errno, f"cannot read stoplist {path}: {e.strerror}") from e
    except UnicodeDecodeError as e:
        raise StoplistFormatError(f"{path}: not valid UTF-8") from e

    comments, words = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if not words:
                comments.append(stripped[1:].strip())
            continue
        if len(stripped.split()) > 1:
            raise StoplistFormatError(f"{path}:{lineno}: embedded whitespace in {stripped!r}")
        words.append(normalize(stripped))

    unique = frozenset(words)
    return Stoplist(unique, _parse_header(comments, path), len(words) - len(unique))
