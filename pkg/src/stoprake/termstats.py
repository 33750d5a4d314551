"""Collection/document frequency statistics and random-occurrence models.

For a word seen ``cf`` times in a collection of ``N`` documents, a model of
per-document occurrence counts with mean ``cf / N`` predicts how many
documents should contain it at least once::

    expected_df(cf) = N * (1 - P(0 occurrences | mean = cf / N))

Under a Poisson model ``P(0) = exp(-cf/N)``; under a negative binomial with
dispersion ``r`` it is ``(1 + cf / (N r)) ** -r``. Words whose observed df
sits close to the prediction are scattered at random (function words);
topical words cluster in few documents and fall well below it.
"""

from __future__ import annotations

import math
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

import numpy as np

from .corpus import Corpus, TokenizerConfig, tokenize


POISSON = "poisson"
NEGBIN = "negbin"

R_MIN = 1e-3
R_MAX = 1e3
FIT_RTOL = 1e-6


class FitError(ValueError):
    pass


class FitBoundaryWarning(UserWarning):
    pass


@dataclass(frozen=True)
class TermStats:
    word: str
    cf: int
    df: int


@dataclass
class TermStatsTable:
    entries: dict[str, TermStats]
    N: int

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries.values())

    def __getitem__(self, word: str) -> TermStats:
        return self.entries[word]

    def __contains__(self, word):
        return word in self.entries

    @property
    def total_tokens(self) -> int:
        return sum(e.cf for e in self.entries.values())

    def sorted_entries(self) -> list[TermStats]:
        """Entries by descending cf, then word."""
        return sorted(self.entries.values(), key=lambda e: (-e.cf, e.word))

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(cf, df) as float arrays, in ``sorted_entries`` order."""
        rows = self.sorted_entries()
        cf = np.fromiter((e.cf for e in rows), dtype=float, count=len(rows))
        df = np.fromiter((e.df for e in rows), dtype=float, count=len(rows))
        return cf, df

    @classmethod
    def from_counts(cls, counts: Mapping[str, tuple[int, int]], N: int) -> "TermStatsTable":
        entries = {w: TermStats(w, cf, df) for w, (cf, df) in counts.items()}
        table = cls(entries, N)
        table.validate()
        return table

    def validate(self):
        if self.N < 1:
            raise ValueError("N must be at least 1")
        for e in self.entries.values():
            if not (1 <= e.df <= e.cf and e.df <= self.N):
                raise ValueError(f"inconsistent counts for {e.word!r}: cf={e.cf} df={e.df} N={self.N}")


@dataclass(frozen=True)
class OccurrenceModel:
    kind: str
    N: int
    r: float | None = None

    def __post_init__(self):
        if self.kind not in (POISSON, NEGBIN):
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.N < 1:
            raise ValueError("N must be at least 1")
        if self.kind == NEGBIN:
            if self.r is None or not self.r > 0 or not math.isfinite(self.r):
                raise ValueError(f"negative binomial needs a finite r > 0, got {self.r!r}")
        elif self.r is not None:
            raise ValueError("Poisson model takes no r")

    @classmethod
    def poisson(cls, N: int) -> "OccurrenceModel":
        return cls(POISSON, N)

    @classmethod
    def negbin(cls, N: int, r: float) -> "OccurrenceModel":
        return cls(NEGBIN, N, float(r))

    def describe(self) -> str:
        if self.kind == POISSON:
            return f"poisson N={self.N}"
        return f"negbin r={self.r!r} N={self.N}"


# -- counting ---------------------------------------------------------------


class _Counts:
    """Mergeable partial (cf, df) counts."""

    __slots__ = ("cf", "df", "n_docs")

    def __init__(self):
        self.cf: Counter[str] = Counter()
        self.df: Counter[str] = Counter()
        self.n_docs = 0

    def add_document(self, words: Iterable[str]):
        doc = Counter(words)
        self.cf.update(doc)
        self.df.update(doc.keys())
        self.n_docs += 1

    def merge(self, other: "_Counts") -> "_Counts":
        self.cf.update(other.cf)
        self.df.update(other.df)
        self.n_docs += other.n_docs
        return self


def _count_texts(args) -> _Counts:
    texts, config = args
    counts = _Counts()
    for text in texts:
        counts.add_document(w.normal for w in tokenize(text, config).words())
    return counts


def compute_term_stats(
    corpus: Corpus, tokenizer_config: TokenizerConfig | None = None, workers: int = 1
) -> TermStatsTable:
    """Count collection frequency and document frequency of every normalized word."""
    if corpus.N < 1:
        raise ValueError("corpus is empty")
    config = tokenizer_config or TokenizerConfig()
    texts = [d.text for d in corpus]
    if workers > 1 and len(texts) > 1:
        size = math.ceil(len(texts) / workers)
        chunks = [(texts[i : i + size], config) for i in range(0, len(texts), size)]
        total = _Counts()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_count_texts, chunks):
                total.merge(part)
    else:
        total = _count_texts((texts, config))
    return TermStatsTable(
        {w: TermStats(w, total.cf[w], total.df[w]) for w in total.cf}, corpus.N
    )


# -- models -----------------------------------------------------------------


def expected_df(model: OccurrenceModel, cf: float) -> float:
    """Model-predicted number of documents containing a word seen ``cf`` times."""
    if cf < 0 or math.isnan(cf):
        raise ValueError(f"cf must be non-negative, got {cf!r}")
    N = model.N
    if model.kind == POISSON:
        return -N * math.expm1(-cf / N)
    r = model.r
    return -N * math.expm1(-r * math.log1p(cf / (N * r)))


def expected_df_array(model: OccurrenceModel, cf) -> np.ndarray:
    """Vectorised :func:`expected_df`."""
    cf = np.asarray(cf, dtype=float)
    if np.any(cf < 0) or np.any(np.isnan(cf)):
        raise ValueError("cf must be non-negative")
    N = model.N
    if model.kind == POISSON:
        return -N * np.expm1(-cf / N)
    r = model.r
    return -N * np.expm1(-r * np.log1p(cf / (N * r)))


def randomness_ratio(entry: TermStats, model: OccurrenceModel) -> float:
    """Predicted over observed document frequency; near 1 for randomly scattered words."""
    if entry.df < 1:
        raise ValueError(f"df must be at least 1 for {entry.word!r}")
    return expected_df(model, entry.cf) / entry.df


def model_curve(models: list[OccurrenceModel], max_cf: float, points: int = 200):
    """Dense model curves, log-uniform in cf over ``[1, max_cf]``.

    Returns ``(cf, [df_model, ...])``.
    """
    hi = max(float(max_cf), 1.0)
    cf = np.logspace(0.0, math.log10(hi), points)
    return cf, [expected_df_array(m, cf) for m in models]


# -- fitting ----------------------------------------------------------------


INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section(f: Callable[[float], float], a: float, b: float, tol: float):
    """Minimise a unimodal ``f`` on ``[a, b]``.

    Stops once the bracket is narrower than ``tol``. Returns ``(x, f(x))`` for
    the better of the two interior points; callers that care about a minimum
    on the boundary compare against the endpoints themselves.
    """
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


@dataclass(frozen=True)
class NegBinFit:
    model: OccurrenceModel
    objective: float
    at_bound: bool
    n_words: int


def _log_residual_objective(cf: np.ndarray, df: np.ndarray, N: int):
    log_df = np.log(df)
    x = cf / N

    def objective(log_r: float) -> float:
        r = math.exp(log_r)
        pred = -N * np.expm1(-r * np.log1p(x / r))
        resid = np.log(pred) - log_df
        return float(np.dot(resid, resid))

    return objective


def fit_negbin(
    stats: TermStatsTable, r_min: float = R_MIN, r_max: float = R_MAX, rtol: float = FIT_RTOL
) -> NegBinFit:
    """Fit the negative binomial dispersion ``r`` to a df-vs-cf scatter.

    Minimises the sum over vocabulary words of squared log residuals,
    ``(log expected_df(cf_w; r) - log df_w) ** 2``, by golden-section search
    over ``log r`` on ``[r_min, r_max]``. A bracket width of ``rtol`` in log
    space is a relative tolerance on ``r``.
    """
    if len(stats) == 0:
        raise FitError("cannot fit an empty term table")
    cf, df = stats.arrays()
    keep = cf >= 1
    if not keep.any():
        raise FitError("no words with cf >= 1")
    cf, df = cf[keep], df[keep]
    objective = _log_residual_objective(cf, df, stats.N)

    lo, hi = math.log(r_min), math.log(r_max)
    log_r, best = golden_section(objective, lo, hi, rtol)
    f_lo, f_hi = objective(lo), objective(hi)

    scale = max(abs(best), abs(f_lo), abs(f_hi), 1e-300)
    probes = [objective(lo + (hi - lo) * t) for t in (0.25, 0.5, 0.75)]
    flat = max(probes + [f_lo, f_hi]) - min(probes + [f_lo, f_hi]) <= 1e-12 * scale
    if flat:
        log_r, best = hi, f_hi
    elif f_hi <= best:
        log_r, best = hi, f_hi
    elif f_lo <= best:
        log_r, best = lo, f_lo

    at_bound = flat or abs(log_r - lo) <= rtol or abs(log_r - hi) <= rtol
    r = r_max if log_r == hi else r_min if log_r == lo else math.exp(log_r)
    return NegBinFit(OccurrenceModel.negbin(stats.N, r), best, at_bound, int(keep.sum()))


def fit_negbin_r(stats: TermStatsTable, **kwargs) -> OccurrenceModel:
    """Fitted negative binomial model; warns when ``r`` ends on the search boundary."""
    fit = fit_negbin(stats, **kwargs)
    if fit.at_bound:
        warnings.warn(
            f"fitted r={fit.model.r:g} is at the search boundary; the data do not "
            "constrain the dispersion",
            FitBoundaryWarning,
            stacklevel=2,
        )
    return fit.model
