"""Document ingestion and tokenization.

Text is segmented into a flat stream of :class:`Word` and :class:`Delimiter`
items. Words are maximal runs of Unicode letters (or of decimal digits, when
numbers are treated as words); whitespace is dropped; sentence punctuation
and any other symbols become delimiters. Both delimiter kinds end a RAKE
candidate, the kind is kept for reporting and debugging.
"""

from __future__ import annotations

import configparser
import logging
import os
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Union

import regex

log = logging.getLogger(__name__)

SENTENCE = "sentence-separator"
STOP_SYMBOL = "stop-symbol"


class IngestionError(Exception):
    """Raised when a corpus source cannot be read at all."""


@dataclass(frozen=True)
class Document:
    doc_id: str
    text: str


@dataclass(frozen=True)
class SkippedDocument:
    doc_id: str
    reason: str


@dataclass
class Corpus:
    """An ordered document collection.

    Documents are always kept sorted by ``doc_id`` so that everything
    computed downstream is independent of the order they were supplied in.
    """

    documents: list[Document]
    skipped: list[SkippedDocument] = field(default_factory=list)

    def __post_init__(self):
        self.documents = sorted(self.documents, key=lambda d: d.doc_id)
        seen = set()
        for doc in self.documents:
            if doc.doc_id in seen:
                raise ValueError(f"duplicate doc_id {doc.doc_id!r}")
            seen.add(doc.doc_id)

    @property
    def N(self) -> int:
        return len(self.documents)

    def __len__(self):
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    @classmethod
    def from_texts(cls, texts: Iterable[str], prefix: str = "doc-") -> "Corpus":
        """Build an in-memory corpus; ids are zero-padded so sort order is input order."""
        texts = list(texts)
        width = max(1, len(str(len(texts))))
        return cls([Document(f"{prefix}{i:0{width}d}", t) for i, t in enumerate(texts)])


class Word(NamedTuple):
    surface: str
    normal: str


class Delimiter(NamedTuple):
    kind: str


Item = Union[Word, Delimiter]


@dataclass(frozen=True)
class TokenStream:
    items: tuple[Item, ...]

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def words(self) -> list[Word]:
        return [it for it in self.items if isinstance(it, Word)]


@dataclass(frozen=True)
class TokenizerConfig:
    numbers_as_words: bool = True


@dataclass(frozen=True)
class IngestionConfig:
    extensions: tuple[str, ...] = (".txt",)
    # NFC keeps decomposed diacritics (o + U+0301) inside one letter run.
    unicode_normalization: str | None = "NFC"


def normalize(surface: str) -> str:
    return surface.lower()


_TOKEN_RE = regex.compile(
    r"""
    (?P<letters>\p{L}+)
    | (?P<digits>\p{Nd}+)
    | (?P<space>\s+)
    | (?P<sentence>[.!?;:]+)
    | (?P<other>[^\p{L}\p{Nd}\s.!?;:]+)
    """,
    regex.VERBOSE,
)


def tokenize(text: str, config: TokenizerConfig | None = None) -> TokenStream:
    """Split ``text`` into words and delimiters.

    >>> [it for it in tokenize("Izba Odwoławcza.")]
    [Word(surface='Izba', normal='izba'), Word(surface='Odwoławcza', normal='odwoławcza'), Delimiter(kind='sentence-separator')]
    """
    config = config or TokenizerConfig()
    items: list[Item] = []
    for m in _TOKEN_RE.finditer(text):
        group = m.lastgroup
        if group == "letters":
            items.append(Word(m.group(), normalize(m.group())))
        elif group == "digits":
            if config.numbers_as_words:
                items.append(Word(m.group(), m.group()))
            else:
                items.append(Delimiter(STOP_SYMBOL))
        elif group == "sentence":
            items.append(Delimiter(SENTENCE))
        elif group == "other":
            items.append(Delimiter(STOP_SYMBOL))
    return TokenStream(tuple(items))


def _decode(raw: bytes, config: IngestionConfig) -> str:
    text = raw.decode("utf-8")
    if text.startswith("\ufeff"):
        text = text[1:]
    if config.unicode_normalization:
        text = unicodedata.normalize(config.unicode_normalization, text)
    return text


def _load_directory(root: Path, config: IngestionConfig) -> Corpus:
    exts = tuple(e.lower() for e in config.extensions)
    docs, skipped = [], []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        for name in sorted(filenames):
            if exts and not name.lower().endswith(exts):
                continue
            path = Path(dirpath) / name
            doc_id = path.relative_to(root).as_posix()
            try:
                raw = path.read_bytes()
            except OSError as e:
                raise IngestionError(f"cannot read {path}: {e.strerror}") from e
            try:
                docs.append(Document(doc_id, _decode(raw, config)))
            except UnicodeDecodeError as e:
                skipped.append(SkippedDocument(doc_id, f"invalid UTF-8 at byte {e.start}"))
    return Corpus(docs, skipped)


def _load_records(path: Path, config: IngestionConfig) -> Corpus:
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise IngestionError(f"cannot read {path}: {e.strerror}") from e
    docs, skipped = [], []
    for index, line in enumerate(raw.split(b"\n"), start=1):
        line = line.rstrip(b"\r")
        if not line.strip():
            continue
        doc_id = f"rec-{index}"
        try:
            docs.append(Document(doc_id, _decode(line, config)))
        except UnicodeDecodeError as e:
            skipped.append(SkippedDocument(doc_id, f"invalid UTF-8 at byte {e.start}"))
    return Corpus(docs, skipped)


def load_corpus(source: str | os.PathLike, config: IngestionConfig | None = None) -> Corpus:
    """Load a corpus from a directory of text files or a one-document-per-line file.

    In directory mode every file whose extension matches ``config.extensions``
    becomes a document identified by its path relative to ``source``. In line
    mode each non-blank line is a document identified as ``rec-<line number>``.
    Documents that are not valid UTF-8 are skipped and listed in
    ``Corpus.skipped``.
    """
    config = config or IngestionConfig()
    path = Path(source)
    if not path.exists():
        raise IngestionError(f"cannot read {path}: no such file or directory")
    if path.is_dir():
        corpus = _load_directory(path, config)
    else:
        corpus = _load_records(path, config)
    for s in corpus.skipped:
        log.warning("skipped %s: %s", s.doc_id, s.reason)
    if corpus.N == 0:
        raise IngestionError(f"no documents found in {path}")
    return corpus


def _split_list(value: str) -> tuple[str, ...]:
    return tuple(v for v in regex.split(r"[,\s]+", value.strip()) if v)


def load_config(path: str | os.PathLike | None) -> dict:
    """Read the shared INI config file.

    Recognised sections and keys::

        [tokenizer]
        numbers_as_words = true

        [ingest]
        extensions = .txt, .text
        unicode_normalization = NFC      ; or "none"

        [stoplist]
        threshold = 1.6
        min_df = 11
        model = negbin

    Returns a dict with ``tokenizer`` (:class:`TokenizerConfig`), ``ingest``
    (:class:`IngestionConfig`) and ``stoplist`` (plain dict of overrides).
    """
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    if path is not None:
        with open(path, encoding="utf-8") as f:
            parser.read_file(f)

    tok = TokenizerConfig()
    if parser.has_section("tokenizer"):
        tok = TokenizerConfig(
            numbers_as_words=parser.getboolean("tokenizer", "numbers_as_words", fallback=True)
        )

    ing = IngestionConfig()
    if parser.has_section("ingest"):
        sec = parser["ingest"]
        exts = _split_list(sec.get("extensions", ".txt"))
        norm = sec.get("unicode_normalization", "NFC").strip()
        if norm.lower() in ("", "none", "off", "false"):
            norm = None
        elif norm.upper() not in ("NFC", "NFD", "NFKC", "NFKD"):
            raise ValueError(f"{path}: unknown unicode_normalization {norm!r}")
        else:
            norm = norm.upper()
        ing = IngestionConfig(extensions=exts, unicode_normalization=norm)

    stop = {}
    if parser.has_section("stoplist"):
        sec = parser["stoplist"]
        if "threshold" in sec:
            stop["threshold"] = sec.getfloat("threshold")
        if "min_df" in sec:
            stop["min_df"] = sec.getint("min_df")
        if "model" in sec:
            stop["model"] = sec.get("model").strip()

    return {"tokenizer": tok, "ingest": ing, "stoplist": stop}
