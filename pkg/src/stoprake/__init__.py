"""RAKE keyword extraction with stoplists generated from corpus statistics."""

from .corpus import (
    Corpus,
    Delimiter,
    Document,
    IngestionConfig,
    IngestionError,
    TokenizerConfig,
    TokenStream,
    Word,
    load_config,
    load_corpus,
    tokenize,
)
from .rake import (
    CandidatePhrase,
    CooccurrenceGraph,
    ScoredKeyword,
    build_graph,
    extract_candidates,
    extract_keywords,
    score_keywords,
)
from .reports import (
    KeywordFrequencyRow,
    corpus_keyword_frequencies,
    export_scatter,
    filter_by_token_count,
)
from .stoplist import (
    Stoplist,
    StoplistConfig,
    generate_stoplist,
    load_stoplist,
    save_stoplist,
)
from .termstats import (
    FitError,
    OccurrenceModel,
    TermStats,
    TermStatsTable,
    compute_term_stats,
    expected_df,
    fit_negbin,
    fit_negbin_r,
    randomness_ratio,
)

__version__ = "0.1.0"

__all__ = [
    "build_graph",
    "CandidatePhrase",
    "compute_term_stats",
    "CooccurrenceGraph",
    "Corpus",
    "corpus_keyword_frequencies",
    "Delimiter",
    "Document",
    "expected_df",
    "export_scatter",
    "extract_candidates",
    "extract_keywords",
    "filter_by_token_count",
    "fit_negbin",
    "fit_negbin_r",
    "FitError",
    "generate_stoplist",
    "IngestionConfig",
    "IngestionError",
    "KeywordFrequencyRow",
    "load_config",
    "load_corpus",
    "load_stoplist",
    "OccurrenceModel",
    "randomness_ratio",
    "save_stoplist",
    "score_keywords",
    "ScoredKeyword",
    "Stoplist",
    "StoplistConfig",
    "TermStats",
    "TermStatsTable",
    "tokenize",
    "TokenizerConfig",
    "TokenStream",
    "Word",
]
