"""Distributed representations trained or loaded from files.

Word vectors come from a from-scratch skip-gram trainer with negative
sampling, document vectors from a PV-DM trainer that optimizes a per-doc
vector alongside the word matrices, and sentence vectors from an external
file produced by a transformer exporter (or a seeded fake with the same
format).  GloVe vectors are loaded, never trained.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class EmbeddingError(Exception):
    pass


@dataclass
class EmbeddingTable:
    dim: int
    vectors: dict  # token -> np.ndarray of length dim
    source: str = "trained"

    def __contains__(self, token):
        return token in self.vectors

    def __len__(self):
        return len(self.vectors)


@dataclass
class DocEmbeddingModel:
    dim: int
    vocab: dict  # token -> row index
    word_in: np.ndarray  # (V, dim)
    word_out: np.ndarray  # (V, dim)
    doc_vectors: dict  # doc_id -> np.ndarray
    window: int
    negatives: int
    epochs: int
    seed: int
    noise_cdf: np.ndarray = field(repr=False, default=None)
    noise_tokens: np.ndarray = field(repr=False, default=None)


@dataclass(frozen=True)
class SentenceEmbeddingSet:
    dim: int
    rows: dict  # doc_id -> np.ndarray


def _sigmoid(x):
    return 1.0 / (1.0 + np.exp(-x))


def cosine_similarity(u, v) -> float:
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise EmbeddingError(f"length mismatch: {u.shape} vs {v.shape}")
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


# ---------------------------------------------------------------------------
# Negative-sampling objective shared by both trainers
# ---------------------------------------------------------------------------


def sgns_loss(context_vec, out_pos, out_negs) -> float:
    """-log sigma(u_o . h) - sum_n log sigma(-u_n . h)."""
    pos = float(np.dot(out_pos, context_vec))
    loss = -float(np.log(_sigmoid(pos)))
    for u_n in out_negs:
        loss -= float(np.log(_sigmoid(-float(np.dot(u_n, context_vec)))))
    return loss


def _sgns_coefficients(h, outs):
    """Per-output-row gradient coefficients; row 0 is the positive target."""
    scores = _sigmoid(outs @ h)
    scores[0] -= 1.0
    return scores


def sgns_gradients(context_vec, out_pos, out_negs):
    """Analytic gradients of sgns_loss w.r.t. (h, u_o, each u_n).

    Uses the same coefficient computation as the training loops, so the
    finite-difference check covers the path that actually trains.
    """
    outs = np.vstack([out_pos, np.asarray(out_negs)])
    scores = _sgns_coefficients(np.asarray(context_vec, dtype=np.float64), outs)
    d_h = scores @ outs
    d_outs = np.outer(scores, context_vec)
    return d_h, d_outs[0], d_outs[1:]


def _build_vocab(corpus, min_count):
    freq: dict[str, int] = {}
    for seq in corpus:
        for tok in seq.tokens:
            freq[tok] = freq.get(tok, 0) + 1
    kept = [t for t, c in freq.items() if c >= min_count]
    kept.sort(key=lambda t: (-freq[t], t))
    vocab = {tok: i for i, tok in enumerate(kept)}
    counts = np.array([freq[t] for t in kept], dtype=np.float64)
    return vocab, counts


def _noise_cdf(counts):
    # unigram frequency to the 3/4 power, as in the original formulation
    weights = counts**0.75
    return np.cumsum(weights / weights.sum())


def _init_matrix(rng, shape, dim):
    return (rng.random(shape) - 0.5) / dim


def _sample_negatives(rng, cdf, k, exclude):
    neg = np.searchsorted(cdf, rng.random(k), side="right")
    # resample collisions with the positive target (cheap, rare)
    for i in range(k):
        while neg[i] == exclude:
            neg[i] = np.searchsorted(cdf, rng.random(), side="right")
    return neg


def train_word2vec(
    corpus,
    dim=100,
    window=5,
    negatives=5,
    epochs=20,
    seed=1,
    lr=0.025,
    min_lr=1e-4,
    min_count=2,
) -> EmbeddingTable:
    """Skip-gram with negative sampling over token sequences.

    Deterministic under the seed: documents, positions and context offsets
    are visited in order and all draws come from one seeded generator.
    Returns the input vectors.
    """
    corpus = [seq for seq in corpus if seq.tokens]
    if not corpus:
        raise EmbeddingError("cannot train embeddings on an empty corpus")
    vocab, counts = _build_vocab(corpus, min_count)
    if len(vocab) < 2:
        raise EmbeddingError(f"embedding vocabulary needs >= 2 tokens, got {len(vocab)}")
    cdf = _noise_cdf(counts)
    rng = np.random.Generator(np.random.PCG64(seed))
    W = _init_matrix(rng, (len(vocab), dim), dim)
    U = np.zeros((len(vocab), dim))

    docs = [[vocab[t] for t in seq.tokens if t in vocab] for seq in corpus]
    total_positions = max(1, epochs * sum(len(d) for d in docs))
    processed = 0
    for _ in range(epochs):
        for doc in docs:
            for t, center in enumerate(doc):
                alpha = max(min_lr, lr * (1.0 - processed / total_positions))
                processed += 1
                lo = max(0, t - window)
                hi = min(len(doc), t + window + 1)
                for c in range(lo, hi):
                    if c == t:
                        continue
                    context = doc[c]
                    v = W[center]
                    negs = _sample_negatives(rng, cdf, negatives, context)
                    outs = U[np.concatenate(([context], negs))]
                    scores = _sgns_coefficients(v, outs)
                    d_v = scores @ outs
                    U[context] -= alpha * scores[0] * v
                    for i, n in enumerate(negs):
                        U[n] -= alpha * scores[i + 1] * v
                    W[center] = v - alpha * d_v
    return EmbeddingTable(
        dim=dim, vectors={tok: W[i].copy() for tok, i in vocab.items()}, source="trained"
    )


def train_doc2vec(
    corpus,
    dim=500,
    window=5,
    negatives=5,
    epochs=20,
    seed=1,
    lr=0.025,
    min_lr=1e-4,
    min_count=2,
) -> DocEmbeddingModel:
    """PV-DM: the prediction context is the mean of the doc vector and the
    in-window word vectors; the center word is predicted with negative
    sampling.  Doc vectors, word input and word output matrices all train.
    """
    corpus = list(corpus)
    if not corpus:
        raise EmbeddingError("cannot train doc vectors on an empty corpus")
    vocab, counts = _build_vocab(corpus, min_count)
    if len(vocab) < 2:
        raise EmbeddingError(f"embedding vocabulary needs >= 2 tokens, got {len(vocab)}")
    cdf = _noise_cdf(counts)
    rng = np.random.Generator(np.random.PCG64(seed))
    D = _init_matrix(rng, (len(corpus), dim), dim)
    W = _init_matrix(rng, (len(vocab), dim), dim)
    U = np.zeros((len(vocab), dim))

    docs = [[vocab[t] for t in seq.tokens if t in vocab] for seq in corpus]
    total_positions = max(1, epochs * sum(len(d) for d in docs))
    processed = 0
    for _ in range(epochs):
        for d_idx, doc in enumerate(docs):
            for t, center in enumerate(doc):
                alpha = max(min_lr, lr * (1.0 - processed / total_positions))
                processed += 1
                lo = max(0, t - window)
                hi = min(len(doc), t + window + 1)
                ctx = [doc[c] for c in range(lo, hi) if c != t]
                h = (D[d_idx] + W[ctx].sum(axis=0)) / (len(ctx) + 1) if ctx else D[d_idx].copy()
                negs = _sample_negatives(rng, cdf, negatives, center)
                outs = U[np.concatenate(([center], negs))]
                scores = _sgns_coefficients(h, outs)
                d_h = (scores @ outs) / (len(ctx) + 1)
                U[center] -= alpha * scores[0] * h
                for i, n in enumerate(negs):
                    U[n] -= alpha * scores[i + 1] * h
                D[d_idx] -= alpha * d_h
                for w in ctx:
                    W[w] -= alpha * d_h
    return DocEmbeddingModel(
        dim=dim,
        vocab=vocab,
        word_in=W,
        word_out=U,
        doc_vectors={seq.doc_id: D[i].copy() for i, seq in enumerate(corpus)},
        window=window,
        negatives=negatives,
        epochs=epochs,
        seed=seed,
        noise_cdf=cdf,
        noise_tokens=counts,
    )


def infer_doc_vector(model: DocEmbeddingModel, tokens, steps=50, seed=1, lr=0.025, min_lr=1e-4):
    """Optimize a fresh doc vector against frozen word matrices.

    Runs `steps` passes over the document positions; only the new doc
    vector receives updates.  An empty (or fully out-of-vocabulary) token
    list yields the zero vector.
    """
    if model.word_in is None or not model.doc_vectors:
        raise EmbeddingError("model has not been trained")
    doc = [model.vocab[t] for t in tokens if t in model.vocab]
    rng = np.random.Generator(np.random.PCG64(seed))
    d = _init_matrix(rng, model.dim, model.dim)
    if not doc:
        return np.zeros(model.dim)
    W, U, cdf = model.word_in, model.word_out, model.noise_cdf
    window = model.window
    total = max(1, steps * len(doc))
    processed = 0
    for _ in range(steps):
        for t, center in enumerate(doc):
            alpha = max(min_lr, lr * (1.0 - processed / total))
            processed += 1
            lo = max(0, t - window)
            hi = min(len(doc), t + window + 1)
            ctx = [doc[c] for c in range(lo, hi) if c != t]
            h = (d + W[ctx].sum(axis=0)) / (len(ctx) + 1) if ctx else d.copy()
            negs = _sample_negatives(rng, cdf, model.negatives, center)
            outs = U[np.concatenate(([center], negs))]
            scores = _sgns_coefficients(h, outs)
            d = d - alpha * (scores @ outs) / (len(ctx) + 1)
    return d


# ---------------------------------------------------------------------------
# File formats
# ---------------------------------------------------------------------------


def load_glove(path, expected_dim=None) -> EmbeddingTable:
    """Read word vectors in GloVe text format: `token v1 ... vD` per line.

    An optional `V D` header line (two integers) is accepted and skipped.
    Lines whose float count disagrees with the first vector line are
    rejected with their line number.
    """
    path = Path(path)
    if not path.exists():
        raise EmbeddingError(f"embedding file not found: {path}")
    vectors = {}
    dim = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.rstrip("\n").split(" ")
            if not line.strip():
                continue
            if lineno == 1 and len(parts) == 2:
                try:
                    int(parts[0]), int(parts[1])
                    continue  # header
                except ValueError:
                    pass
            token = parts[0]
            try:
                vec = np.array([float(v) for v in parts[1:]], dtype=np.float64)
            except ValueError:
                raise EmbeddingError(f"non-numeric vector component on line {lineno} of {path}")
            if dim is None:
                dim = len(vec)
                if dim == 0:
                    raise EmbeddingError(f"no vector components on line {lineno} of {path}")
            elif len(vec) != dim:
                raise EmbeddingError(
                    f"inconsistent dimension on line {lineno} of {path}: got {len(vec)}, expected {dim}"
                )
            vectors[token] = vec
    if dim is None:
        raise EmbeddingError(f"no vectors found in {path}")
    if expected_dim is not None and dim != expected_dim:
        raise EmbeddingError(f"expected dimension {expected_dim}, file has {dim}")
    return EmbeddingTable(dim=dim, vectors=vectors, source="glove-file")


def write_glove(table: EmbeddingTable, path, header=False) -> None:
    """Write a table in the same text format, 6 significant digits."""
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            fh.write(f"{len(table.vectors)} {table.dim}\n")
        for token, vec in table.vectors.items():
            fh.write(token + " " + " ".join(f"{v:.6g}" for v in vec) + "\n")


def load_sentence_embeddings(path) -> SentenceEmbeddingSet:
    """Read `N D` header then `doc_id v1 ... vD` rows."""
    path = Path(path)
    if not path.exists():
        raise EmbeddingError(f"sentence embedding file not found: {path}")
    rows = {}
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise EmbeddingError(f"bad header in {path}: expected 'N D'")
        n, dim = int(header[0]), int(header[1])
        for lineno, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split(" ")
            doc_id = parts[0]
            if doc_id in rows:
                raise EmbeddingError(f"duplicate doc id {doc_id!r} on line {lineno} of {path}")
            vec = np.array([float(v) for v in parts[1:]], dtype=np.float64)
            if len(vec) != dim:
                raise EmbeddingError(
                    f"ragged row on line {lineno} of {path}: got {len(vec)}, expected {dim}"
                )
            rows[doc_id] = vec
    if len(rows) != n:
        raise EmbeddingError(f"header announced {n} rows, found {len(rows)} in {path}")
    return SentenceEmbeddingSet(dim=dim, rows=rows)


def write_sentence_embeddings(rows: dict, dim: int, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{len(rows)} {dim}\n")
        for doc_id, vec in rows.items():
            fh.write(str(doc_id) + " " + " ".join(f"{v:.6g}" for v in vec) + "\n")


def write_fake_sentence_embeddings(doc_ids, path, dim=1024, seed=1) -> None:
    """Seeded random unit vectors in the sentence-embedding file format.

    Stand-in for the external transformer exporter so the full experiment
    matrix runs offline; carries no label signal by construction.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    rows = {}
    for doc_id in doc_ids:
        v = rng.standard_normal(dim)
        rows[doc_id] = v / np.linalg.norm(v)
    write_sentence_embeddings(rows, dim, path)
