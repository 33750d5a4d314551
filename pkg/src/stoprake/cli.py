"""Command line interface.

Exit codes: 0 on success, 1 for usage errors, 2 for data errors (unreadable
input, malformed files, failed fits).
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import logging
import os
import sys
import warnings

from . import __version__
from .corpus import IngestionError, load_config, load_corpus
from .rake import extract_keywords
from .reports import (
    DOCUMENTS,
    OCCURRENCES,
    corpus_keyword_frequencies,
    export_scatter,
    filter_by_token_count,
    write_curve_csv,
    write_stats_csv,
)
from .stoplist import (
    DEFAULT_MIN_DF,
    DEFAULT_THRESHOLD,
    Stoplist,
    StoplistConfig,
    generate_stoplist,
    load_stoplist,
    save_stoplist,
)
from .termstats import (
    NEGBIN,
    POISSON,
    FitBoundaryWarning,
    OccurrenceModel,
    compute_term_stats,
    fit_negbin,
)

log = logging.getLogger("stoprake")

EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(value):
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return n


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as f:
            yield f


# -- shared pipeline steps --------------------------------------------------


def _load(args):
    cfg = load_config(args.config)
    corpus = load_corpus(args.source, cfg["ingest"])
    return cfg, corpus


def _model(args, cfg, stats):
    kind = args.model or cfg["stoplist"].get("model", NEGBIN)
    if kind == POISSON:
        return OccurrenceModel.poisson(stats.N)
    if kind != NEGBIN:
        raise UsageError(f"unknown model {kind!r}")
    fit = fit_negbin(stats)
    if fit.at_bound:
        log.warning("fitted r=%g lies on the search boundary", fit.model.r)
    return fit.model


def _stoplist_config(args, cfg):
    threshold = args.threshold if args.threshold is not None else cfg["stoplist"].get("threshold", DEFAULT_THRESHOLD)
    min_df = args.min_df if args.min_df is not None else cfg["stoplist"].get("min_df", DEFAULT_MIN_DF)
    try:
        return StoplistConfig(threshold, min_df)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _auto_stoplist(args, cfg, corpus):
    stats = compute_term_stats(corpus, cfg["tokenizer"], workers=args.workers)
    return generate_stoplist(stats, _model(args, cfg, stats), _stoplist_config(args, cfg))


def _resolve_stoplist(args, cfg, corpus) -> Stoplist:
    if args.no_stoplist:
        return Stoplist.empty()
    if args.stoplist:
        sl = load_stoplist(args.stoplist)
        if sl.duplicates_collapsed:
            log.info("%s: collapsed %d duplicate entries", args.stoplist, sl.duplicates_collapsed)
        return sl
    return _auto_stoplist(args, cfg, corpus)


# -- commands ---------------------------------------------------------------


def cmd_ingest_check(args):
    cfg, corpus = _load(args)
    print(f"documents: {corpus.N}")
    print(f"skipped: {len(corpus.skipped)}")
    for s in corpus.skipped:
        print(f"  {s.doc_id}: {s.reason}")
    return 0


def cmd_stats(args):
    cfg, corpus = _load(args)
    stats = compute_term_stats(corpus, cfg["tokenizer"], workers=args.workers)
    with _output(args.out) as f:
        write_stats_csv(stats, f)
    return 0


def cmd_fit(args):
    cfg, corpus = _load(args)
    stats = compute_term_stats(corpus, cfg["tokenizer"], workers=args.workers)
    fit = fit_negbin(stats)
    if fit.at_bound:
        log.warning("fitted r=%g lies on the search boundary", fit.model.r)
    print(repr(fit.model.r))
    if args.curve:
        max_cf = max(e.cf for e in stats)
        with _output(args.curve) as f:
            write_curve_csv([OccurrenceModel.poisson(stats.N), fit.model], max_cf, f)
    return 0


def cmd_stoplist_generate(args):
    cfg, corpus = _load(args)
    sl = _auto_stoplist(args, cfg, corpus)
    save_stoplist(sl, args.out)
    log.info("wrote %d words to %s", len(sl), args.out)
    return 0


def _json_keywords(doc_id, keywords):
    items = ", ".join(
        '{"surface": %s, "score": %.4f, "tokens": %d}'
        % (json.dumps(k.surface, ensure_ascii=False), k.score, k.token_count)
        for k in keywords
    )
    return '{"doc_id": %s, "keywords": [%s]}' % (json.dumps(doc_id, ensure_ascii=False), items)


def cmd_extract(args):
    cfg, corpus = _load(args)
    stoplist = _resolve_stoplist(args, cfg, corpus)
    with _output(args.out) as f:
        writer = None
        if args.format == "csv":
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["doc_id", "surface", "score", "tokens"])
        for doc in corpus:
            kws = extract_keywords(doc, stoplist, cfg["tokenizer"], args.top_k, args.max_phrase_len)
            if writer:
                for k in kws:
                    writer.writerow([doc.doc_id, k.surface, f"{k.score:.4f}", k.token_count])
            else:
                f.write(_json_keywords(doc.doc_id, kws) + "\n")
    return 0


def _print_rows(rows, fmt, f):
    if fmt == "csv":
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["phrase", "doc_count"])
        for r in rows:
            w.writerow([r.surface, r.doc_count])
        return
    width = max([len("phrase")] + [len(r.surface) for r in rows])
    f.write(f"{'phrase':<{width}}  doc_count\n")
    for r in rows:
        f.write(f"{r.surface:<{width}}  {r.doc_count}\n")


def _frequency_rows(args):
    cfg, corpus = _load(args)
    stoplist = _resolve_stoplist(args, cfg, corpus)
    return corpus_keyword_frequencies(
        corpus, stoplist, cfg["tokenizer"], args.count, args.max_phrase_len, args.workers
    )


def cmd_report_top(args):
    rows = _frequency_rows(args)[: args.k]
    with _output(args.out) as f:
        _print_rows(rows, args.format, f)
    return 0


def cmd_report_by_len(args):
    rows = filter_by_token_count(_frequency_rows(args), args.tokens)[: args.k]
    with _output(args.out) as f:
        _print_rows(rows, args.format, f)
    return 0


def cmd_export_scatter(args):
    cfg, corpus = _load(args)
    stats = compute_term_stats(corpus, cfg["tokenizer"], workers=args.workers)
    models = []
    if args.models in ("poisson", "both"):
        models.append(OccurrenceModel.poisson(stats.N))
    if args.models in ("negbin", "both"):
        fit = fit_negbin(stats)
        if fit.at_bound:
            log.warning("fitted r=%g lies on the search boundary", fit.model.r)
        models.append(fit.model)
    export_scatter(stats, models, args.out, args.curves)
    return 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("source", help="directory of .txt files, or a file with one document per line")
    common.add_argument("--config", help="INI config file ([tokenizer], [ingest], [stoplist])")
    common.add_argument("--workers", type=_positive_int, default=1, help="processes for counting")
    common.add_argument("-v", "--verbose", action="store_true")

    stop_opts = _Parser(add_help=False)
    stop_opts.add_argument("--threshold", type=float, help=f"ratio cut-off (default {DEFAULT_THRESHOLD})")
    stop_opts.add_argument("--min-df", type=_positive_int, help=f"minimum document frequency (default {DEFAULT_MIN_DF})")
    stop_opts.add_argument("--model", choices=[NEGBIN, POISSON], help="occurrence model (default negbin)")

    use_stop = _Parser(add_help=False, parents=[stop_opts])
    g = use_stop.add_mutually_exclusive_group()
    g.add_argument("--stoplist", help="stoplist file; by default one is generated from the corpus")
    g.add_argument("--no-stoplist", action="store_true", help="split on punctuation only")
    use_stop.add_argument("--max-phrase-len", type=_positive_int)

    report_opts = _Parser(add_help=False, parents=[use_stop])
    report_opts.add_argument("--count", choices=[DOCUMENTS, OCCURRENCES], default=DOCUMENTS)
    report_opts.add_argument("--format", choices=["table", "csv"], default="table")
    report_opts.add_argument("--out")

    parser = _Parser(prog="stoprake", description="RAKE keyword extraction with corpus-generated stoplists")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ingest-check", parents=[common], help="load the corpus and report skipped documents")
    p.set_defaults(func=cmd_ingest_check)

    p = sub.add_parser("stats", parents=[common], help="word,cf,df CSV")
    p.add_argument("--out")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("fit", parents=[common], help="fit the negative binomial r")
    p.add_argument("--curve", help="write cf,df_poisson,df_negbin model curves here")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("stoplist", help="stoplist commands")
    ssub = p.add_subparsers(dest="stoplist_command", required=True, parser_class=_Parser)
    q = ssub.add_parser("generate", parents=[common, stop_opts], help="generate a stoplist from corpus statistics")
    q.add_argument("--out", required=True)
    q.set_defaults(func=cmd_stoplist_generate)

    p = sub.add_parser("extract", parents=[common, use_stop], help="per-document keywords")
    p.add_argument("--top-k", type=_positive_int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("report", help="corpus keyword reports")
    rsub = p.add_subparsers(dest="report_command", required=True, parser_class=_Parser)
    q = rsub.add_parser("top", parents=[common, report_opts], help="most frequent keywords")
    q.add_argument("--k", type=_positive_int, default=20)
    q.set_defaults(func=cmd_report_top)
    q = rsub.add_parser("by-len", parents=[common, report_opts], help="most frequent keywords with n tokens")
    q.add_argument("--tokens", type=_positive_int, required=True)
    q.add_argument("--k", type=_positive_int, default=20)
    q.set_defaults(func=cmd_report_by_len)

    p = sub.add_parser("export", help="data exports")
    esub = p.add_subparsers(dest="export_command", required=True, parser_class=_Parser)
    q = esub.add_parser("scatter", parents=[common], help="df-vs-cf scatter and model curves")
    q.add_argument("--out", required=True)
    q.add_argument("--curves", help="model curve CSV (default: <out>.curves.csv)")
    q.add_argument("--models", choices=["poisson", "negbin", "both", "none"], default="both")
    q.set_defaults(func=cmd_export_scatter)

    return parser


def main(argv=None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8", newline="\n")
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        with warnings.catch_warnings():
            # reported through logging instead
            warnings.simplefilter("ignore", FitBoundaryWarning)
            code = args.func(args)
            sys.stdout.flush()
            return code
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head); silence the exit-time flush
        devnull = os.open(os.devnull, os.O_WRONLY)
        with contextlib.suppress(AttributeError, OSError, ValueError):
            os.dup2(devnull, sys.stdout.fileno())
        return 0
    except UsageError as e:
        print(f"stoprake: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (IngestionError, OSError, ValueError) as e:
        print(f"stoprake: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
