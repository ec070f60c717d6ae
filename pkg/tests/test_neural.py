import math

import numpy as np
import pytest

from hatebench.neural import (
    NeuralError,
    SequenceBatch,
    bi_rnn_forward,
    bptt_train,
    build_sequence_vocab,
    cell_forward,
    init_model,
    load_checkpoint,
    loss_and_grads,
    make_batches,
    pad_and_index,
    predict,
    save_checkpoint,
)
from hatebench.textprep import TokenSequence


def seq(doc_id, tokens):
    return TokenSequence(doc_id=doc_id, tokens=tuple(tokens))


def rel_err(a, b):
    denom = max(abs(a), abs(b))
    if denom < 1e-8:
        return 0.0
    return abs(a - b) / denom


def scalar_sigmoid(v):
    return 1.0 / (1.0 + math.exp(-v))


class TestPadAndIndex:
    VOCAB = {"a": 2, "b": 3}

    def test_pad_to_max_len(self):
        ids, length = pad_and_index(["a", "b"], self.VOCAB, 4)
        assert ids.tolist() == [2, 3, 0, 0]
        assert length == 2

    def test_oov_maps_to_one(self):
        ids, _ = pad_and_index(["mystery"], self.VOCAB, 2)
        assert ids.tolist() == [1, 0]

    def test_truncation(self):
        ids, length = pad_and_index(["a"] * 10, self.VOCAB, 4)
        assert ids.tolist() == [2, 2, 2, 2]
        assert length == 4


class TestCellForward:
    def test_gru_zero_params_zero_state_fixed_point(self):
        H, De = 4, 3
        W = np.zeros((3 * H, De))
        U = np.zeros((3 * H, H))
        b = np.zeros(3 * H)
        x = np.random.default_rng(0).standard_normal((2, De))
        h = cell_forward("gru", W, U, b, x, np.zeros((2, H)))
        np.testing.assert_array_equal(h, np.zeros((2, H)))

    def test_lstm_zero_params_zero_state_fixed_point(self):
        H, De = 4, 3
        W = np.zeros((4 * H, De))
        U = np.zeros((4 * H, H))
        b = np.zeros(4 * H)
        x = np.random.default_rng(0).standard_normal((2, De))
        h, c = cell_forward("lstm", W, U, b, x, (np.zeros((2, H)), np.zeros((2, H))))
        np.testing.assert_array_equal(h, np.zeros((2, H)))
        np.testing.assert_array_equal(c, np.zeros((2, H)))

    def test_gru_matches_scalar_oracle(self):
        # independent re-implementation of one step with plain loops
        rng = np.random.default_rng(5)
        H, De = 3, 4
        W = rng.standard_normal((3 * H, De))
        U = rng.standard_normal((3 * H, H))
        b = rng.standard_normal(3 * H)
        x = rng.standard_normal((1, De))
        h0 = rng.standard_normal((1, H))
        got = cell_forward("gru", W, U, b, x, h0)[0]

        for j in range(H):
            az = b[j] + sum(W[j, k] * x[0, k] for k in range(De)) + sum(U[j, k] * h0[0, k] for k in range(H))
            ar = b[H + j] + sum(W[H + j, k] * x[0, k] for k in range(De)) + sum(
                U[H + j, k] * h0[0, k] for k in range(H)
            )
            z = scalar_sigmoid(az)
            # r gates are component-wise; compute the full r vector first
        r = []
        for j in range(H):
            ar = b[H + j] + sum(W[H + j, k] * x[0, k] for k in range(De)) + sum(
                U[H + j, k] * h0[0, k] for k in range(H)
            )
            r.append(scalar_sigmoid(ar))
        for j in range(H):
            az = b[j] + sum(W[j, k] * x[0, k] for k in range(De)) + sum(U[j, k] * h0[0, k] for k in range(H))
            z = scalar_sigmoid(az)
            ag = b[2 * H + j] + sum(W[2 * H + j, k] * x[0, k] for k in range(De)) + sum(
                U[2 * H + j, k] * r[k] * h0[0, k] for k in range(H)
            )
            g = math.tanh(ag)
            expected = (1.0 - z) * h0[0, j] + z * g
            assert abs(got[j] - expected) < 1e-12

    def test_lstm_matches_scalar_oracle(self):
        rng = np.random.default_rng(6)
        H, De = 3, 2
        W = rng.standard_normal((4 * H, De))
        U = rng.standard_normal((4 * H, H))
        b = rng.standard_normal(4 * H)
        x = rng.standard_normal((1, De))
        h0 = rng.standard_normal((1, H))
        c0 = rng.standard_normal((1, H))
        h_got, c_got = cell_forward("lstm", W, U, b, x, (h0, c0))

        def pre(row):
            return b[row] + sum(W[row, k] * x[0, k] for k in range(De)) + sum(
                U[row, k] * h0[0, k] for k in range(H)
            )

        for j in range(H):
            i = scalar_sigmoid(pre(j))
            f = scalar_sigmoid(pre(H + j))
            o = scalar_sigmoid(pre(2 * H + j))
            g = math.tanh(pre(3 * H + j))
            c = f * c0[0, j] + i * g
            h = o * math.tanh(c)
            assert abs(c_got[0, j] - c) < 1e-12
            assert abs(h_got[0, j] - h) < 1e-12

    def test_unknown_kind(self):
        with pytest.raises(NeuralError):
            cell_forward("elman", None, None, None, None, None)


def tiny_model(kind, seed=1, hidden=3, vocab_size=5, embed_dim=4, max_len=4):
    vocab = {f"w{i}": i + 2 for i in range(vocab_size)}
    return init_model(kind, vocab, hidden=hidden, max_len=max_len, seed=seed, embed_dim=embed_dim)


def tiny_batch(model, rows, lengths, labels):
    return SequenceBatch(
        ids=np.array(rows, dtype=np.int64),
        lengths=np.array(lengths, dtype=np.int64),
        labels=np.array(labels, dtype=np.int64),
    )


class TestBiRnnForward:
    def test_identical_rows_identical_probabilities(self):
        model = tiny_model("gru")
        batch = tiny_batch(model, [[2, 3, 0, 0]] * 4, [2] * 4, [0, 1, 0, 1])
        probs = bi_rnn_forward(model, batch)
        assert np.ptp(probs) == 0.0

    def test_probability_range_over_many_random_batches(self):
        rng = np.random.default_rng(9)
        for kind in ("gru", "lstm"):
            model = tiny_model(kind, seed=3)
            for _ in range(500):
                ids = rng.integers(1, 7, size=(2, 4))
                lengths = rng.integers(1, 5, size=2)
                for r in range(2):
                    ids[r, lengths[r]:] = 0
                batch = SequenceBatch(ids=ids, lengths=lengths, labels=np.zeros(2, dtype=np.int64))
                p = bi_rnn_forward(model, batch)
                assert np.all((p >= 0.0) & (p <= 1.0))

    def test_reverse_sequences_and_swap_directions(self):
        # reversing each row's non-pad prefix and swapping the two cells (and
        # the two halves of the head) must leave the output unchanged
        for kind in ("gru", "lstm"):
            model = tiny_model(kind, seed=11)
            batch = tiny_batch(model, [[2, 3, 4, 0], [5, 6, 0, 0]], [3, 2], [0, 1])
            base = bi_rnn_forward(model, batch)

            swapped = tiny_model(kind, seed=11)
            swapped.embeddings = model.embeddings.copy()
            for name in ("W", "U", "b"):
                swapped.params[f"fwd_{name}"] = model.params[f"bwd_{name}"].copy()
                swapped.params[f"bwd_{name}"] = model.params[f"fwd_{name}"].copy()
            H = model.hidden
            swapped.params["head_w"] = np.concatenate(
                [model.params["head_w"][H:], model.params["head_w"][:H]]
            )
            swapped.params["head_b"] = model.params["head_b"].copy()

            rows = []
            for r, length in zip(batch.ids, batch.lengths):
                row = np.concatenate([r[:length][::-1], r[length:]])
                rows.append(row)
            reversed_batch = SequenceBatch(
                ids=np.vstack(rows), lengths=batch.lengths, labels=batch.labels
            )
            np.testing.assert_allclose(bi_rnn_forward(swapped, reversed_batch), base, atol=1e-12)

    def test_padding_invariance_exact(self):
        for kind in ("gru", "lstm"):
            model = tiny_model(kind, seed=2, max_len=6)
            short = tiny_batch(model, [[2, 3, 0, 0, 0, 0]], [2], [1])
            longer = tiny_batch(model, [[2, 3, 0, 0, 0, 0]], [2], [1])
            p1 = bi_rnn_forward(model, short)
            p2 = bi_rnn_forward(model, longer)
            np.testing.assert_array_equal(p1, p2)
            # zero-length rows are defined: the head sees the zero state
            empty = tiny_batch(model, [[0, 0, 0, 0, 0, 0]], [0], [0])
            p = bi_rnn_forward(model, empty)
            assert 0.0 <= p[0] <= 1.0


class TestGradients:
    """Full-BPTT analytic gradients vs central finite differences."""

    def check_model(self, kind, seed):
        model = tiny_model(kind, seed=seed, hidden=4, embed_dim=5)
        batch = tiny_batch(model, [[2, 3, 4, 0], [5, 2, 0, 0]], [3, 2], [1, 0])
        _, grads = loss_and_grads(model, batch)

        checked = 0
        tensors = list(grads)
        for name in tensors:
            target = model.embeddings if name == "embeddings" else model.params[name]
            for fi in range(target.size):
                idx = np.unravel_index(fi, target.shape)
                if name == "embeddings" and idx[0] == 0:
                    continue  # pad row is pinned to zero
                orig = target[idx]
                h = 1e-5 * max(1.0, abs(orig))
                target[idx] = orig + h
                up, _ = loss_and_grads(model, batch)
                target[idx] = orig - h
                down, _ = loss_and_grads(model, batch)
                target[idx] = orig
                fd = (up - down) / (2 * h)
                assert rel_err(grads[name][idx], fd) < 1e-4, f"{kind} {name}{idx}"
                checked += 1
        assert checked >= 200

    def test_gru_gradients(self):
        self.check_model("gru", 21)

    def test_lstm_gradients(self):
        self.check_model("lstm", 22)


def presence_task(n_docs=500, seed=3):
    """Label = presence of the token 'trigger' somewhere in the document."""
    rng = np.random.default_rng(seed)
    filler = [f"f{i}" for i in range(30)]
    docs, labels = [], []
    for i in range(n_docs):
        tokens = list(rng.choice(filler, size=rng.integers(4, 10)))
        label = int(rng.random() < 0.5)
        if label:
            tokens.insert(int(rng.integers(0, len(tokens) + 1)), "trigger")
        docs.append(seq(f"d{i}", tokens))
        labels.append(label)
    return docs, np.array(labels, dtype=np.int64)


class TestBpttTrain:
    def test_epochs_zero_leaves_model_unchanged(self):
        model = tiny_model("gru", seed=5)
        before = {k: v.copy() for k, v in model.params.items()}
        batches = [tiny_batch(model, [[2, 0, 0, 0], [3, 0, 0, 0]], [1, 1], [0, 1])]
        bptt_train(model, batches, epochs=0)
        for k in before:
            np.testing.assert_array_equal(model.params[k], before[k])

    def test_single_class_rejected(self):
        model = tiny_model("gru")
        batches = [tiny_batch(model, [[2, 0, 0, 0]], [1], [1])]
        with pytest.raises(NeuralError, match="both classes"):
            bptt_train(model, batches, epochs=1)

    @pytest.mark.filterwarnings("ignore:invalid value encountered")
    def test_nan_loss_aborts_with_location(self):
        model = tiny_model("gru")
        model.params["head_w"][:] = np.nan
        batches = [tiny_batch(model, [[2, 0, 0, 0], [3, 0, 0, 0]], [1, 1], [0, 1])]
        with pytest.raises(NeuralError, match="epoch 0, batch 0"):
            bptt_train(model, batches, epochs=1)

    def test_presence_task_learnable(self):
        docs, labels = presence_task()
        train_docs, train_y = docs[:350], labels[:350]
        test_docs, test_y = docs[350:], labels[350:]

        # threshold oracle: a logistic fit on the brute-force presence
        # feature clears 0.95 on this split, so 0.95 is a fair floor
        from hatebench.classifiers import LogisticRegressionClassifier

        feat = lambda ds: np.array([[1.0 if "trigger" in d.tokens else 0.0] for d in ds])
        baseline = LogisticRegressionClassifier(epochs=200).fit(feat(train_docs), train_y)
        assert (baseline.predict(feat(test_docs)) == test_y).mean() > 0.95

        vocab = build_sequence_vocab(t for d in train_docs for t in d.tokens)
        model = init_model("gru", vocab, hidden=16, max_len=12, seed=7, embed_dim=16)
        batches = make_batches(train_docs, train_y, vocab, model.max_len, batch_size=32)
        bptt_train(model, batches, epochs=20, lr=0.05, momentum=0.9)
        acc = (predict(model, test_docs) == test_y).mean()
        assert acc >= 0.95, f"accuracy {acc}"

    def test_loss_non_increasing_small_lr_fixture(self):
        docs, labels = presence_task(n_docs=60, seed=9)
        vocab = build_sequence_vocab(t for d in docs for t in d.tokens)
        model = init_model("gru", vocab, hidden=8, max_len=10, seed=4, embed_dim=8)
        batches = make_batches(docs, labels, vocab, model.max_len, batch_size=60)

        def full_loss():
            return loss_and_grads(model, batches[0])[0]

        losses = [full_loss()]
        for _ in range(8):
            bptt_train(model, batches, epochs=1, lr=0.01, momentum=0.0)
            losses.append(full_loss())
        assert all(b <= a + 1e-12 for a, b in zip(losses, losses[1:])), losses


class TestCheckpoints:
    def test_roundtrip_predictions_identical(self, tmp_path):
        docs, labels = presence_task(n_docs=40, seed=2)
        vocab = build_sequence_vocab(t for d in docs for t in d.tokens)
        for kind in ("gru", "lstm"):
            model = init_model(kind, vocab, hidden=6, max_len=8, seed=3, embed_dim=5)
            batches = make_batches(docs, labels, vocab, model.max_len, batch_size=20)
            bptt_train(model, batches, epochs=2)
            path = tmp_path / f"{kind}.ckpt"
            save_checkpoint(model, path)
            back = load_checkpoint(path)
            np.testing.assert_array_equal(predict(model, docs), predict(back, docs))

    def test_dim_mismatch_rejected(self, tmp_path):
        model = tiny_model("gru")
        path = tmp_path / "m.ckpt"
        save_checkpoint(model, path)
        blob = path.read_bytes()
        path.write_bytes(blob[:-16])  # drop the tail of the last tensor
        with pytest.raises(NeuralError, match="dim mismatch"):
            load_checkpoint(path)

    def test_not_a_checkpoint(self, tmp_path):
        path = tmp_path / "junk.ckpt"
        path.write_bytes(b'{"format": "something-else"}\n')
        with pytest.raises(NeuralError, match="not a recognized"):
            load_checkpoint(path)
