"""Frequency and sentiment feature engineering.

N-gram extraction, bag-of-words and TF-IDF vectorization over the most
common n-grams, a lexicon polarity score, and horizontal feature
concatenation with per-column provenance labels.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .textprep import _data_path, tokenize


class FeatureError(Exception):
    pass


@dataclass(frozen=True)
class NgramVocabulary:
    entries: dict  # n-gram -> column index, contiguous 0..len-1
    doc_freq: tuple  # per-entry document frequency, aligned with indices
    n_min: int
    n_max: int
    max_features: int
    corpus_size: int

    def __len__(self):
        return len(self.entries)

    @property
    def ordered_ngrams(self) -> list[str]:
        out = [""] * len(self.entries)
        for gram, idx in self.entries.items():
            out[idx] = gram
        return out


@dataclass(frozen=True)
class SentimentLexicon:
    polarity: dict  # word -> float in [-1, 1]


@dataclass(frozen=True)
class FeatureMatrix:
    values: np.ndarray  # (n_docs, width), dense float64
    column_labels: tuple[str, ...]
    doc_ids: tuple[str, ...]

    def __post_init__(self):
        if self.values.ndim != 2:
            raise FeatureError("feature values must be 2-D")
        if self.values.shape[1] != len(self.column_labels):
            raise FeatureError("column label count does not match width")
        if self.values.shape[0] != len(self.doc_ids):
            raise FeatureError("doc id count does not match row count")
        if len(set(self.column_labels)) != len(self.column_labels):
            raise FeatureError("column labels must be unique")

    @property
    def width(self) -> int:
        return self.values.shape[1]

    def slice_by_prefix(self, prefix: str) -> "FeatureMatrix":
        """Recover one concatenated part by its provenance label prefix."""
        cols = [i for i, lab in enumerate(self.column_labels) if lab.split(":", 1)[0] == prefix]
        return FeatureMatrix(
            values=self.values[:, cols],
            column_labels=tuple(self.column_labels[i] for i in cols),
            doc_ids=self.doc_ids,
        )


def extract_ngrams(tokens, n_min: int, n_max: int) -> Counter:
    """All contiguous n-grams for n in [n_min, n_max], space-joined, with counts."""
    if not 1 <= n_min <= n_max:
        raise FeatureError(f"invalid n-gram range [{n_min}, {n_max}]")
    grams: Counter = Counter()
    tokens = list(tokens)
    for n in range(n_min, n_max + 1):
        for i in range(len(tokens) - n + 1):
            grams[" ".join(tokens[i : i + n])] += 1
    return grams


def fit_vocabulary(corpus, n_min=1, n_max=6, max_features=1000, rank_by="total") -> NgramVocabulary:
    """Rank n-grams over the training corpus and keep the top max_features.

    Ranking key: total corpus frequency (or document frequency when
    rank_by="doc"), ties broken by higher document frequency then
    lexicographic n-gram order, so vocabularies are platform-stable.
    """
    corpus = list(corpus)
    if not corpus:
        raise FeatureError("cannot fit a vocabulary on an empty corpus")
    if rank_by not in ("total", "doc"):
        raise FeatureError(f"unknown ranking mode {rank_by!r}")
    total: Counter = Counter()
    doc_freq: Counter = Counter()
    for seq in corpus:
        grams = extract_ngrams(seq.tokens, n_min, n_max)
        total.update(grams)
        doc_freq.update(grams.keys())
    primary = total if rank_by == "total" else doc_freq
    ranked = sorted(primary, key=lambda g: (-primary[g], -doc_freq[g], g))
    kept = ranked[:max_features]
    return NgramVocabulary(
        entries={gram: idx for idx, gram in enumerate(kept)},
        doc_freq=tuple(doc_freq[gram] for gram in kept),
        n_min=n_min,
        n_max=n_max,
        max_features=max_features,
        corpus_size=len(corpus),
    )


def bow_transform(tokens, vocab: NgramVocabulary) -> np.ndarray:
    """Raw counts of vocabulary entries in the document; OOV n-grams ignored."""
    row = np.zeros(len(vocab), dtype=np.float64)
    for gram, count in extract_ngrams(tokens, vocab.n_min, vocab.n_max).items():
        idx = vocab.entries.get(gram)
        if idx is not None:
            row[idx] = count
    return row


def compute_idf(vocab: NgramVocabulary) -> np.ndarray:
    """Smoothed inverse document frequency: ln((1+N)/(1+df)) + 1.

    The +1 smoothing keeps every weight strictly positive and avoids
    division by zero for unseen-document edge cases; this exact form is the
    project's canonical formula and is frozen by the tests.
    """
    df = np.asarray(vocab.doc_freq, dtype=np.float64)
    return np.log((1.0 + vocab.corpus_size) / (1.0 + df)) + 1.0


def tfidf_transform(tokens, vocab: NgramVocabulary, idf: np.ndarray) -> np.ndarray:
    """count * idf, then L2 row normalization (zero rows stay zero)."""
    if len(idf) != len(vocab):
        raise FeatureError("idf length does not match vocabulary")
    row = bow_transform(tokens, vocab) * idf
    norm = math.sqrt(float(np.dot(row, row)))
    if norm > 0.0:
        row /= norm
    return row


DEFAULT_NEGATORS = frozenset({"not", "no", "never", "neither", "nor", "cannot", "n't", "without"})


def sentiment_score(text_or_tokens, lexicon: SentimentLexicon, negators=DEFAULT_NEGATORS) -> float:
    """Mean lexicon polarity of matched tokens, in [-1, 1].

    A matched token immediately preceded by a negator contributes its
    sign-flipped polarity.  No lexicon matches -> 0.0.
    """
    tokens = tokenize(text_or_tokens) if isinstance(text_or_tokens, str) else list(text_or_tokens)
    scores = []
    for i, tok in enumerate(tokens):
        value = lexicon.polarity.get(tok)
        if value is None:
            continue
        if i > 0 and tokens[i - 1] in negators:
            value = -value
        scores.append(value)
    if not scores:
        return 0.0
    return float(sum(scores) / len(scores))


def concat_features(parts) -> FeatureMatrix:
    """Horizontal concatenation; parts must agree on row count and doc order."""
    parts = list(parts)
    if not parts:
        raise FeatureError("nothing to concatenate")
    first = parts[0]
    for part in parts[1:]:
        if part.values.shape[0] != first.values.shape[0]:
            raise FeatureError(
                f"row count mismatch: {part.values.shape[0]} vs {first.values.shape[0]}"
            )
        if part.doc_ids != first.doc_ids:
            raise FeatureError("document order mismatch between feature parts")
    labels: list[str] = []
    for part in parts:
        labels.extend(part.column_labels)
    return FeatureMatrix(
        values=np.hstack([part.values for part in parts]),
        column_labels=tuple(labels),
        doc_ids=first.doc_ids,
    )


# ---------------------------------------------------------------------------
# Corpus-level helpers used by the experiment runner
# ---------------------------------------------------------------------------


def bow_matrix(sequences, vocab: NgramVocabulary) -> FeatureMatrix:
    values = np.vstack([bow_transform(seq.tokens, vocab) for seq in sequences]) if sequences else np.zeros((0, len(vocab)))
    return FeatureMatrix(
        values=values,
        column_labels=tuple(f"ngram:{g}" for g in vocab.ordered_ngrams),
        doc_ids=tuple(seq.doc_id for seq in sequences),
    )


def tfidf_matrix(sequences, vocab: NgramVocabulary, idf: np.ndarray) -> FeatureMatrix:
    values = np.vstack([tfidf_transform(seq.tokens, vocab, idf) for seq in sequences]) if sequences else np.zeros((0, len(vocab)))
    return FeatureMatrix(
        values=values,
        column_labels=tuple(f"ngram:{g}" for g in vocab.ordered_ngrams),
        doc_ids=tuple(seq.doc_id for seq in sequences),
    )


def sentiment_matrix(docs_or_token_seqs, lexicon: SentimentLexicon, negators=DEFAULT_NEGATORS) -> FeatureMatrix:
    rows = []
    ids = []
    for item in docs_or_token_seqs:
        if hasattr(item, "tokens"):
            rows.append(sentiment_score(item.tokens, lexicon, negators))
            ids.append(item.doc_id)
        else:
            rows.append(sentiment_score(item.text, lexicon, negators))
            ids.append(item.id)
    return FeatureMatrix(
        values=np.asarray(rows, dtype=np.float64).reshape(-1, 1),
        column_labels=("sentiment",),
        doc_ids=tuple(ids),
    )


# ---------------------------------------------------------------------------
# File formats
# ---------------------------------------------------------------------------


def save_vocabulary(vocab: NgramVocabulary, path) -> None:
    """TSV: header `n_min n_max N`, then `ngram<TAB>index<TAB>doc_freq` rows."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{vocab.n_min} {vocab.n_max} {vocab.corpus_size}\n")
        for gram in vocab.ordered_ngrams:
            idx = vocab.entries[gram]
            fh.write(f"{gram}\t{idx}\t{vocab.doc_freq[idx]}\n")


def load_vocabulary(path) -> NgramVocabulary:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 3:
            raise FeatureError(f"bad vocabulary header in {path}")
        n_min, n_max, corpus_size = (int(v) for v in header)
        entries = {}
        freqs = {}
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            gram, idx, df = line.split("\t")
            entries[gram] = int(idx)
            freqs[int(idx)] = int(df)
    return NgramVocabulary(
        entries=entries,
        doc_freq=tuple(freqs[i] for i in range(len(freqs))),
        n_min=n_min,
        n_max=n_max,
        max_features=len(entries),
        corpus_size=corpus_size,
    )


def load_lexicon(path=None) -> SentimentLexicon:
    """TSV `word<TAB>polarity` with polarity in [-1, 1]; '#' comments."""
    path = Path(path) if path else _data_path("sentiment_lexicon.tsv")
    polarity = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            try:
                word, value = line.split("\t")
                score = float(value)
            except ValueError:
                raise FeatureError(f"malformed lexicon line {lineno} in {path}")
            if not -1.0 <= score <= 1.0:
                raise FeatureError(f"polarity out of [-1,1] on line {lineno} in {path}")
            polarity[word] = score
    return SentimentLexicon(polarity=polarity)


def export_matrix_csv(matrix: FeatureMatrix, path) -> None:
    """CSV with a provenance-labeled header row; first column is the doc id."""
    import csv as _csv

    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = _csv.writer(fh)
        writer.writerow(["doc_id", *matrix.column_labels])
        for doc_id, row in zip(matrix.doc_ids, matrix.values):
            writer.writerow([doc_id, *(repr(float(v)) for v in row)])
