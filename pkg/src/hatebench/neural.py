"""Desk-scale bidirectional recurrent classifiers trained with BPTT.

One forward/backward code path serves both cell kinds (GRU, LSTM); the
training step and the gradient checks call the same loss_and_grads, so the
finite-difference suite covers exactly the arithmetic that trains.

Sequences are right-padded; state updates are masked per row, which makes
padding invariance exact: appending pad tokens never changes a row's
output.  The classification head reads the concatenated final states of
the two directions through a sigmoid.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

PAD_ID = 0
OOV_ID = 1


class NeuralError(Exception):
    pass


def _sigmoid(z):
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


@dataclass
class SequenceBatch:
    ids: np.ndarray  # (B, T) int64, PAD_ID padded
    lengths: np.ndarray  # (B,)
    labels: np.ndarray  # (B,) in {0, 1}


@dataclass
class RNNModel:
    kind: str  # "gru" | "lstm"
    vocab: dict  # token -> id (>= 2)
    embeddings: np.ndarray  # (V, De); row 0 pad, row 1 oov
    train_embeddings: bool
    hidden: int
    max_len: int
    params: dict  # name -> np.ndarray
    seed: int

    @property
    def embed_dim(self):
        return self.embeddings.shape[1]


def build_sequence_vocab(tokens) -> dict:
    """token -> id map with 0 and 1 reserved for pad / out-of-vocabulary."""
    vocab = {}
    for tok in tokens:
        if tok not in vocab:
            vocab[tok] = len(vocab) + 2
    return vocab


def pad_and_index(tokens, vocab, max_len):
    """Truncate to max_len, map unknown tokens to OOV_ID, right-pad with 0."""
    if max_len < 1:
        raise NeuralError("max_len must be >= 1")
    ids = [vocab.get(tok, OOV_ID) for tok in list(tokens)[:max_len]]
    length = len(ids)
    ids = ids + [PAD_ID] * (max_len - length)
    return np.array(ids, dtype=np.int64), length


def make_batches(sequences, labels, vocab, max_len, batch_size):
    """Fixed-order batches; the trailing partial batch is kept."""
    rows = []
    lengths = []
    for seq in sequences:
        ids, ln = pad_and_index(seq.tokens, vocab, max_len)
        rows.append(ids)
        lengths.append(ln)
    rows = np.vstack(rows) if rows else np.zeros((0, max_len), dtype=np.int64)
    lengths = np.array(lengths, dtype=np.int64)
    labels = np.asarray(labels, dtype=np.int64)
    batches = []
    for start in range(0, len(rows), batch_size):
        sl = slice(start, start + batch_size)
        batches.append(SequenceBatch(ids=rows[sl], lengths=lengths[sl], labels=labels[sl]))
    return batches


# ---------------------------------------------------------------------------
# Parameter construction
# ---------------------------------------------------------------------------

_GATES = {"gru": 3, "lstm": 4}


def _cell_param_names(direction):
    return [f"{direction}_W", f"{direction}_U", f"{direction}_b"]


def init_model(
    kind,
    vocab,
    hidden=64,
    max_len=50,
    seed=1,
    embeddings=None,
    embed_dim=None,
    train_embeddings=None,
) -> RNNModel:
    """Build a bidirectional model.

    `embeddings` may be an EmbeddingTable-like object (dim + vectors dict);
    matching vocab rows are copied in and the matrix is frozen by default.
    Without pretrained vectors the matrix is randomly initialized and
    trainable by default.
    """
    if kind not in _GATES:
        raise NeuralError(f"unknown cell kind {kind!r}")
    rng = np.random.Generator(np.random.PCG64(seed))
    if embeddings is not None:
        de = embeddings.dim
        E = np.zeros((len(vocab) + 2, de))
        for tok, idx in vocab.items():
            vec = embeddings.vectors.get(tok)
            if vec is not None:
                E[idx] = vec
        trainable = False if train_embeddings is None else train_embeddings
    else:
        de = embed_dim or 50
        E = (rng.random((len(vocab) + 2, de)) - 0.5) / np.sqrt(de)
        E[PAD_ID] = 0.0
        trainable = True if train_embeddings is None else train_embeddings
    g = _GATES[kind]
    scale = 1.0 / np.sqrt(hidden)
    params = {}
    for direction in ("fwd", "bwd"):
        params[f"{direction}_W"] = (rng.random((g * hidden, de)) - 0.5) * 2 * scale
        params[f"{direction}_U"] = (rng.random((g * hidden, hidden)) - 0.5) * 2 * scale
        params[f"{direction}_b"] = np.zeros(g * hidden)
    params["head_w"] = (rng.random(2 * hidden) - 0.5) * 2 * scale
    params["head_b"] = np.zeros(1)
    return RNNModel(
        kind=kind,
        vocab=vocab,
        embeddings=E,
        train_embeddings=trainable,
        hidden=hidden,
        max_len=max_len,
        params=params,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# Single cell step (used directly by the unit oracle tests)
# ---------------------------------------------------------------------------


def cell_forward(kind, W, U, b, x, state):
    """One recurrent step; state is h for GRU, (h, c) for LSTM.

    Returns the new state in the same shape as the input state.
    """
    if kind == "gru":
        h_new, _ = gru_step(W, U, b, x, state)
        return h_new
    if kind == "lstm":
        h, c = state
        h_new, c_new, _ = lstm_step(W, U, b, x, h, c)
        return h_new, c_new
    raise NeuralError(f"unknown cell kind {kind!r}")


def gru_step(W, U, b, x, h):
    H = h.shape[1]
    az = x @ W[:H].T + h @ U[:H].T + b[:H]
    ar = x @ W[H:2 * H].T + h @ U[H:2 * H].T + b[H:2 * H]
    z = _sigmoid(az)
    r = _sigmoid(ar)
    ag = x @ W[2 * H:].T + (r * h) @ U[2 * H:].T + b[2 * H:]
    g = np.tanh(ag)
    h_new = (1.0 - z) * h + z * g
    return h_new, (z, r, g, h)


def lstm_step(W, U, b, x, h, c):
    H = h.shape[1]
    pre = x @ W.T + h @ U.T + b
    i = _sigmoid(pre[:, :H])
    f = _sigmoid(pre[:, H:2 * H])
    o = _sigmoid(pre[:, 2 * H:3 * H])
    g = np.tanh(pre[:, 3 * H:])
    c_new = f * c + i * g
    h_new = o * np.tanh(c_new)
    return h_new, c_new, (i, f, o, g, h, c)


# ---------------------------------------------------------------------------
# Full forward / backward
# ---------------------------------------------------------------------------


def _direction_forward(model, ids, lengths, direction):
    """Run one direction over non-pad positions; returns final h and caches."""
    B, T = ids.shape
    H = model.hidden
    W = model.params[f"{direction}_W"]
    U = model.params[f"{direction}_U"]
    b = model.params[f"{direction}_b"]
    h = np.zeros((B, H))
    c = np.zeros((B, H))
    caches = []
    order = range(T) if direction == "fwd" else range(T - 1, -1, -1)
    for t in order:
        x = model.embeddings[ids[:, t]]
        mask = (t < lengths).astype(np.float64)[:, None]
        if model.kind == "gru":
            h_new, gates = gru_step(W, U, b, x, h)
            h_next = mask * h_new + (1.0 - mask) * h
            caches.append((t, x, mask, gates))
            h = h_next
        else:
            h_new, c_new, gates = lstm_step(W, U, b, x, h, c)
            h_next = mask * h_new + (1.0 - mask) * h
            c_next = mask * c_new + (1.0 - mask) * c
            caches.append((t, x, mask, gates, c_new))
            h = h_next
            c = c_next
    return h, caches


def _direction_backward(model, ids, caches, d_final, direction, grads):
    """Backpropagate through one direction; accumulates parameter grads and
    scatters embedding grads when the embedding matrix is trainable."""
    H = model.hidden
    W = model.params[f"{direction}_W"]
    U = model.params[f"{direction}_U"]
    dW = grads[f"{direction}_W"]
    dU = grads[f"{direction}_U"]
    db = grads[f"{direction}_b"]
    dh = d_final
    dc = np.zeros_like(dh)
    for item in reversed(caches):
        if model.kind == "gru":
            t, x, mask, (z, r, g, h_prev) = item
            dh_new = dh * mask
            dh_prev = dh * (1.0 - mask)
            dz = dh_new * (g - h_prev)
            dg = dh_new * z
            dh_prev = dh_prev + dh_new * (1.0 - z)
            dag = dg * (1.0 - g * g)
            drh = dag @ U[2 * H:]
            dr = drh * h_prev
            dh_prev = dh_prev + drh * r
            daz = dz * z * (1.0 - z)
            dar = dr * r * (1.0 - r)
            dh_prev = dh_prev + daz @ U[:H] + dar @ U[H:2 * H]
            dW[2 * H:] += dag.T @ x
            dU[2 * H:] += dag.T @ (r * h_prev)
            db[2 * H:] += dag.sum(axis=0)
            dW[:H] += daz.T @ x
            dU[:H] += daz.T @ h_prev
            db[:H] += daz.sum(axis=0)
            dW[H:2 * H] += dar.T @ x
            dU[H:2 * H] += dar.T @ h_prev
            db[H:2 * H] += dar.sum(axis=0)
            dx = daz @ W[:H] + dar @ W[H:2 * H] + dag @ W[2 * H:]
            dh = dh_prev
        else:
            t, x, mask, (i, f, o, g, h_prev, c_prev), c_new = item
            dh_new = dh * mask
            dh_prev = dh * (1.0 - mask)
            tc = np.tanh(c_new)
            do = dh_new * tc
            dc_new = dc * mask + dh_new * o * (1.0 - tc * tc)
            dc_prev = dc * (1.0 - mask) + dc_new * f
            di = dc_new * g
            df = dc_new * c_prev
            dg = dc_new * i
            dai = di * i * (1.0 - i)
            daf = df * f * (1.0 - f)
            dao = do * o * (1.0 - o)
            dag = dg * (1.0 - g * g)
            da = np.hstack([dai, daf, dao, dag])
            dW += da.T @ x
            dU += da.T @ h_prev
            db += da.sum(axis=0)
            dx = da @ W
            dh = dh_prev + da @ U
            dc = dc_prev
        if model.train_embeddings:
            np.add.at(grads["embeddings"], ids[:, t], dx)


def bi_rnn_forward(model, batch: SequenceBatch):
    """P(positive) per row: both directions, concatenated final states, head."""
    if batch.ids.size and int(batch.ids.max()) >= len(model.embeddings):
        raise NeuralError("token id out of range for the embedding matrix")
    h_f, _ = _direction_forward(model, batch.ids, batch.lengths, "fwd")
    h_b, _ = _direction_forward(model, batch.ids, batch.lengths, "bwd")
    concat = np.hstack([h_f, h_b])
    logits = concat @ model.params["head_w"] + model.params["head_b"][0]
    return _sigmoid(logits)


def loss_and_grads(model, batch: SequenceBatch):
    """Mean binary cross-entropy and gradients for every trainable tensor."""
    B = len(batch.labels)
    h_f, cache_f = _direction_forward(model, batch.ids, batch.lengths, "fwd")
    h_b, cache_b = _direction_forward(model, batch.ids, batch.lengths, "bwd")
    concat = np.hstack([h_f, h_b])
    logits = concat @ model.params["head_w"] + model.params["head_b"][0]
    p = _sigmoid(logits)
    y = batch.labels.astype(np.float64)
    loss = float(np.mean(np.logaddexp(0.0, -logits) * y + np.logaddexp(0.0, logits) * (1.0 - y)))

    grads = {name: np.zeros_like(arr) for name, arr in model.params.items()}
    if model.train_embeddings:
        grads["embeddings"] = np.zeros_like(model.embeddings)
    dlogit = (p - y) / B
    grads["head_w"] += concat.T @ dlogit
    grads["head_b"][0] = dlogit.sum()
    d_concat = np.outer(dlogit, model.params["head_w"])
    H = model.hidden
    _direction_backward(model, batch.ids, cache_f, d_concat[:, :H], "fwd", grads)
    _direction_backward(model, batch.ids, cache_b, d_concat[:, H:], "bwd", grads)
    if model.train_embeddings:
        grads["embeddings"][PAD_ID] = 0.0
    return loss, grads


# ---------------------------------------------------------------------------
# Training
# ---------------------------------------------------------------------------


def _global_norm(grads):
    return float(np.sqrt(sum(float((g * g).sum()) for g in grads.values())))


def bptt_train(model, batches, epochs=10, lr=0.05, momentum=0.9, clip=5.0, verbose=False):
    """SGD with momentum over fixed-order batches; gradient norm clipped.

    A NaN loss aborts with the epoch and batch index in the message.
    """
    labels = np.concatenate([b.labels for b in batches]) if batches else np.array([])
    if len(np.unique(labels)) < 2:
        raise NeuralError("training batches must contain both classes")
    velocity = {name: np.zeros_like(arr) for name, arr in model.params.items()}
    if model.train_embeddings:
        velocity["embeddings"] = np.zeros_like(model.embeddings)
    for epoch in range(epochs):
        total = 0.0
        for b_idx, batch in enumerate(batches):
            loss, grads = loss_and_grads(model, batch)
            if not np.isfinite(loss):
                raise NeuralError(f"non-finite loss at epoch {epoch}, batch {b_idx}")
            norm = _global_norm(grads)
            if norm > clip:
                scale = clip / norm
                for g in grads.values():
                    g *= scale
            for name, g in grads.items():
                velocity[name] = momentum * velocity[name] - lr * g
                if name == "embeddings":
                    model.embeddings += velocity[name]
                else:
                    model.params[name] += velocity[name]
            total += loss * len(batch.labels)
        if verbose:
            print(f"epoch {epoch}: mean loss {total / len(labels):.6f}")
    return model


def predict_proba(model, sequences, batch_size=64):
    batches = make_batches(
        sequences, np.zeros(len(list(sequences)), dtype=np.int64), model.vocab, model.max_len, batch_size
    )
    return np.concatenate([bi_rnn_forward(model, b) for b in batches]) if batches else np.array([])


def predict(model, sequences, threshold=0.5, batch_size=64):
    return (predict_proba(model, sequences, batch_size) >= threshold).astype(np.int64)


# ---------------------------------------------------------------------------
# Checkpoints: one ASCII JSON header line, then raw float64 tensors
# ---------------------------------------------------------------------------

_TENSOR_ORDER = ["embeddings", "fwd_W", "fwd_U", "fwd_b", "bwd_W", "bwd_U", "bwd_b", "head_w", "head_b"]


def save_checkpoint(model: RNNModel, path):
    header = {
        "format": "hatebench-rnn",
        "version": 1,
        "kind": model.kind,
        "hidden": model.hidden,
        "max_len": model.max_len,
        "embed_dim": model.embed_dim,
        "vocab_size": len(model.vocab),
        "train_embeddings": model.train_embeddings,
        "seed": model.seed,
        "tokens": sorted(model.vocab, key=model.vocab.get),
    }
    with open(path, "wb") as fh:
        fh.write(json.dumps(header).encode("ascii") + b"\n")
        for name in _TENSOR_ORDER:
            arr = model.embeddings if name == "embeddings" else model.params[name]
            fh.write(np.ascontiguousarray(arr, dtype=np.float64).tobytes())


def load_checkpoint(path) -> RNNModel:
    with open(path, "rb") as fh:
        header = json.loads(fh.readline().decode("ascii"))
        if header.get("format") != "hatebench-rnn" or header.get("version") != 1:
            raise NeuralError(f"not a recognized checkpoint: {path}")
        kind = header["kind"]
        if kind not in _GATES:
            raise NeuralError(f"unknown cell kind {kind!r} in checkpoint")
        H = header["hidden"]
        de = header["embed_dim"]
        V = header["vocab_size"] + 2
        g = _GATES[kind]
        shapes = {
            "embeddings": (V, de),
            "fwd_W": (g * H, de),
            "fwd_U": (g * H, H),
            "fwd_b": (g * H,),
            "bwd_W": (g * H, de),
            "bwd_U": (g * H, H),
            "bwd_b": (g * H,),
            "head_w": (2 * H,),
            "head_b": (1,),
        }
        tensors = {}
        for name in _TENSOR_ORDER:
            shape = shapes[name]
            count = int(np.prod(shape))
            buf = fh.read(count * 8)
            if len(buf) != count * 8:
                raise NeuralError(f"checkpoint truncated while reading {name} (dim mismatch?)")
            tensors[name] = np.frombuffer(buf, dtype=np.float64).reshape(shape).copy()
        if fh.read(1):
            raise NeuralError("checkpoint has trailing bytes (dim mismatch?)")
    vocab = {tok: i + 2 for i, tok in enumerate(header["tokens"])}
    params = {name: tensors[name] for name in _TENSOR_ORDER if name != "embeddings"}
    return RNNModel(
        kind=kind,
        vocab=vocab,
        embeddings=tensors["embeddings"],
        train_embeddings=header["train_embeddings"],
        hidden=H,
        max_len=header["max_len"],
        params=params,
        seed=header["seed"],
    )
