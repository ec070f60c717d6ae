"""From-scratch classifiers behind a uniform fit / predict / predict_proba
contract.  Labels are integers with 1 = positive (hate) and 0 = negative.

Boundary rules are frozen because they change benchmark numbers:
logistic threshold is inclusive (p >= threshold -> positive); decision-tree
routing sends value <= threshold left; all majority ties resolve to the
negative class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


class ClassifierError(Exception):
    pass


def _check_matrix(X):
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise ClassifierError("feature matrix must be 2-D")
    if np.isnan(X).any():
        raise ClassifierError("feature matrix contains NaN")
    return X


def _check_labels(y):
    y = np.asarray(y, dtype=np.int64)
    if not np.isin(y, (0, 1)).all():
        raise ClassifierError("labels must be 0 (nonhate) or 1 (hate)")
    return y


def _sigmoid(z):
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


# ---------------------------------------------------------------------------
# Logistic regression
# ---------------------------------------------------------------------------


def lr_loss(weights, bias, X, y, l2=0.0):
    """Mean binary cross-entropy plus (l2/2)*||w||^2 (bias unregularized)."""
    z = X @ weights + bias
    # log(1+exp(-|z|)) form is stable for large |z|
    per_row = np.logaddexp(0.0, -z) * y + np.logaddexp(0.0, z) * (1 - y)
    return float(per_row.mean() + 0.5 * l2 * float(weights @ weights))


def lr_gradients(weights, bias, X, y, l2=0.0):
    """Analytic gradient of lr_loss w.r.t. (weights, bias)."""
    residual = _sigmoid(X @ weights + bias) - y
    d_w = X.T @ residual / len(y) + l2 * weights
    d_b = float(residual.mean())
    return d_w, d_b


class LogisticRegressionClassifier:
    """Full-batch gradient descent on L2-regularized cross-entropy.

    Columns are standardized at fit time (zero-variance columns are left
    unscaled); weights start at zero, so training is deterministic without
    consuming the seed.
    """

    def __init__(self, learning_rate=0.1, epochs=300, l2=1e-4, seed=0):
        self.learning_rate = learning_rate
        self.epochs = epochs
        self.l2 = l2
        self.seed = seed
        self.weights = None
        self.bias = 0.0
        self.mean_ = None
        self.std_ = None

    def fit(self, X, y):
        X = _check_matrix(X)
        y = _check_labels(y)
        if len(X) != len(y) or len(y) < 2:
            raise ClassifierError("need matching X/y with at least 2 rows")
        if len(np.unique(y)) < 2:
            raise ClassifierError("training data contains a single class")
        self.mean_ = X.mean(axis=0)
        std = X.std(axis=0)
        std[std == 0.0] = 1.0
        self.std_ = std
        Xs = (X - self.mean_) / self.std_
        w = np.zeros(X.shape[1])
        b = 0.0
        for _ in range(self.epochs):
            d_w, d_b = lr_gradients(w, b, Xs, y, self.l2)
            w -= self.learning_rate * d_w
            b -= self.learning_rate * d_b
        self.weights = w
        self.bias = b
        return self

    def _scores(self, X):
        X = _check_matrix(X)
        if self.weights is None:
            raise ClassifierError("classifier is not fitted")
        if X.shape[1] != len(self.weights):
            raise ClassifierError(
                f"width mismatch: model expects {len(self.weights)}, got {X.shape[1]}"
            )
        return ((X - self.mean_) / self.std_) @ self.weights + self.bias

    def predict_proba(self, X):
        return _sigmoid(self._scores(X))

    def predict(self, X, threshold=0.5):
        return (self.predict_proba(X) >= threshold).astype(np.int64)


# ---------------------------------------------------------------------------
# Decision tree (CART, Gini)
# ---------------------------------------------------------------------------


@dataclass
class TreeNode:
    feature: int = -1
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    klass: int = 0
    counts: tuple = (0, 0)  # (negative, positive) training rows routed here

    @property
    def is_leaf(self):
        return self.left is None


def _gini(pos, total):
    p = pos / total
    return 1.0 - p * p - (1.0 - p) * (1.0 - p)


def _best_split(X, y, feature_indices):
    """Best (feature, threshold) by Gini decrease over midpoint candidates.

    Ties resolve to the lowest feature index, then the lowest threshold.
    Returns (decrease, feature, threshold) or None when no feature has two
    distinct values.
    """
    n = len(y)
    Xc = X[:, feature_indices]
    order = np.argsort(Xc, axis=0, kind="stable")
    xs = np.take_along_axis(Xc, order, axis=0)
    ys = y[order]
    cum_pos = np.cumsum(ys, axis=0)
    total_pos = cum_pos[-1]

    boundaries = xs[:-1] != xs[1:]  # (n-1, f) valid split points
    if not boundaries.any():
        return None
    n_left = np.arange(1, n, dtype=np.float64)[:, None]
    n_right = n - n_left
    pos_left = cum_pos[:-1].astype(np.float64)
    pos_right = total_pos.astype(np.float64) - pos_left
    p_l = pos_left / n_left
    p_r = pos_right / n_right
    gini_l = 1.0 - p_l * p_l - (1.0 - p_l) * (1.0 - p_l)
    gini_r = 1.0 - p_r * p_r - (1.0 - p_r) * (1.0 - p_r)
    parent = _gini(float(y.sum()), n)
    decrease = parent - (n_left / n) * gini_l - (n_right / n) * gini_r
    decrease[~boundaries] = -np.inf

    best_rows = np.argmax(decrease, axis=0)  # first max -> lowest threshold
    best_per_feature = decrease[best_rows, np.arange(decrease.shape[1])]
    j = int(np.argmax(best_per_feature))  # first max -> lowest feature index
    if not np.isfinite(best_per_feature[j]):
        return None
    i = int(best_rows[j])
    threshold = (xs[i, j] + xs[i + 1, j]) / 2.0
    return float(best_per_feature[j]), int(feature_indices[j]), float(threshold)


class DecisionTreeClassifier:
    """CART with Gini impurity and midpoint thresholds.

    A node becomes a leaf when it is pure, the depth cap or the
    min_samples_split floor is hit, no feature has two distinct values, or
    the best decrease falls below min_impurity_decrease.  With the default
    min_impurity_decrease of 0.0 a zero-gain split is still taken, which
    lets the tree solve parity-style datasets.
    """

    def __init__(self, max_depth=None, min_samples_split=2, min_impurity_decrease=0.0):
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.min_impurity_decrease = min_impurity_decrease
        self.root = None
        self.n_features_ = None

    def fit(self, X, y, rng=None, max_features=None):
        X = _check_matrix(X)
        y = _check_labels(y)
        if len(X) != len(y) or len(y) < 1:
            raise ClassifierError("need matching X/y with at least 1 row")
        self.n_features_ = X.shape[1]
        self._rng = rng
        self._max_features = max_features
        self.root = self._grow(X, y, depth=0)
        del self._rng
        return self

    def _leaf(self, y):
        pos = int(y.sum())
        neg = len(y) - pos
        return TreeNode(klass=1 if pos > neg else 0, counts=(neg, pos))

    def _candidate_features(self):
        d = self.n_features_
        if self._max_features is None or self._max_features >= d:
            return np.arange(d)
        # fresh subset at every split, from the tree's own substream
        return np.sort(self._rng.choice(d, size=self._max_features, replace=False))

    def _grow(self, X, y, depth):
        pos = int(y.sum())
        if pos == 0 or pos == len(y):
            return self._leaf(y)
        if self.max_depth is not None and depth >= self.max_depth:
            return self._leaf(y)
        if len(y) < self.min_samples_split:
            return self._leaf(y)
        split = _best_split(X, y, self._candidate_features())
        if split is None or split[0] < self.min_impurity_decrease:
            return self._leaf(y)
        _, feature, threshold = split
        mask = X[:, feature] <= threshold
        node = TreeNode(feature=feature, threshold=threshold, counts=(len(y) - pos, pos))
        node.left = self._grow(X[mask], y[mask], depth + 1)
        node.right = self._grow(X[~mask], y[~mask], depth + 1)
        return node

    def predict(self, X):
        X = self._check_fitted(X)
        out = np.empty(len(X), dtype=np.int64)
        for i, row in enumerate(X):
            node = self.root
            while not node.is_leaf:
                node = node.left if row[node.feature] <= node.threshold else node.right
            out[i] = node.klass
        return out

    def predict_proba(self, X):
        X = self._check_fitted(X)
        out = np.empty(len(X), dtype=np.float64)
        for i, row in enumerate(X):
            node = self.root
            while not node.is_leaf:
                node = node.left if row[node.feature] <= node.threshold else node.right
            neg, pos = node.counts
            out[i] = pos / (neg + pos)
        return out

    def _check_fitted(self, X):
        X = _check_matrix(X)
        if self.root is None:
            raise ClassifierError("classifier is not fitted")
        if X.shape[1] != self.n_features_:
            raise ClassifierError(
                f"width mismatch: model expects {self.n_features_}, got {X.shape[1]}"
            )
        return X

    def node_count(self):
        def count(node):
            return 0 if node.is_leaf else 1 + count(node.left) + count(node.right)

        return count(self.root)


# ---------------------------------------------------------------------------
# Random forest
# ---------------------------------------------------------------------------


class RandomForestClassifier:
    """Bagged CART trees with per-split feature subsampling.

    Every tree draws its bootstrap sample and feature subsets from a
    substream seeded by (seed, tree index), so the forest is reproducible
    and trees could be built in any order.
    """

    def __init__(
        self,
        n_trees=100,
        max_features="sqrt",
        bootstrap=True,
        seed=0,
        max_depth=None,
        min_samples_split=2,
        min_impurity_decrease=0.0,
    ):
        if n_trees < 1:
            raise ClassifierError("need at least one tree")
        self.n_trees = n_trees
        self.max_features = max_features
        self.bootstrap = bootstrap
        self.seed = seed
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.min_impurity_decrease = min_impurity_decrease
        self.trees = []

    def _subset_size(self, d):
        if self.max_features == "sqrt":
            return min(d, math.ceil(math.sqrt(d)))
        if self.max_features in (None, "all"):
            return None
        return min(d, int(self.max_features))

    def fit(self, X, y):
        X = _check_matrix(X)
        y = _check_labels(y)
        self.n_features_ = X.shape[1]
        subset = self._subset_size(X.shape[1])
        self.trees = []
        for t in range(self.n_trees):
            rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([self.seed, t])))
            if self.bootstrap:
                idx = rng.integers(0, len(y), size=len(y))
                Xt, yt = X[idx], y[idx]
            else:
                Xt, yt = X, y
            tree = DecisionTreeClassifier(
                max_depth=self.max_depth,
                min_samples_split=self.min_samples_split,
                min_impurity_decrease=self.min_impurity_decrease,
            )
            tree.fit(Xt, yt, rng=rng, max_features=subset)
            self.trees.append(tree)
        return self

    def predict(self, X):
        if not self.trees:
            raise ClassifierError("classifier is not fitted")
        votes = np.zeros(len(np.asarray(X)), dtype=np.int64)
        for tree in self.trees:
            votes += tree.predict(X)
        # strict majority; an even split resolves to the negative class
        return (2 * votes > self.n_trees).astype(np.int64)

    def predict_proba(self, X):
        if not self.trees:
            raise ClassifierError("classifier is not fitted")
        votes = np.zeros(len(np.asarray(X)), dtype=np.float64)
        for tree in self.trees:
            votes += tree.predict(X)
        return votes / self.n_trees


# ---------------------------------------------------------------------------
# Naive Bayes
# ---------------------------------------------------------------------------


class NaiveBayesClassifier:
    """Gaussian or multinomial naive Bayes; variant="auto" picks multinomial
    for nonnegative integer-valued matrices (counts) and gaussian otherwise.
    """

    def __init__(self, variant="auto"):
        if variant not in ("auto", "gaussian", "multinomial"):
            raise ClassifierError(f"unknown naive Bayes variant {variant!r}")
        self.variant = variant
        self.fitted_variant = None

    def fit(self, X, y):
        X = _check_matrix(X)
        y = _check_labels(y)
        variant = self.variant
        if variant == "auto":
            is_counts = bool((X >= 0).all() and (X == np.floor(X)).all())
            variant = "multinomial" if is_counts else "gaussian"
        self.fitted_variant = variant
        self.classes_ = np.array([0, 1])
        counts = np.array([(y == 0).sum(), (y == 1).sum()], dtype=np.float64)
        if (counts == 0).any():
            raise ClassifierError("training data contains a single class")
        self.log_prior_ = np.log(counts / counts.sum())
        self.n_features_ = X.shape[1]
        if variant == "multinomial":
            if (X < 0).any():
                raise ClassifierError("multinomial naive Bayes needs nonnegative features")
            totals = np.vstack([X[y == c].sum(axis=0) for c in (0, 1)])
            smoothed = totals + 1.0  # Laplace alpha = 1
            self.feature_log_prob_ = np.log(smoothed / smoothed.sum(axis=1, keepdims=True))
        else:
            self.theta_ = np.vstack([X[y == c].mean(axis=0) for c in (0, 1)])
            var = np.vstack([X[y == c].var(axis=0) for c in (0, 1)])
            overall_max = float(X.var(axis=0).max())
            floor = 1e-9 * overall_max if overall_max > 0 else 1e-12
            self.var_ = np.maximum(var, floor)
        return self

    def _joint_log_likelihood(self, X):
        X = _check_matrix(X)
        if self.fitted_variant is None:
            raise ClassifierError("classifier is not fitted")
        if X.shape[1] != self.n_features_:
            raise ClassifierError(
                f"width mismatch: model expects {self.n_features_}, got {X.shape[1]}"
            )
        if self.fitted_variant == "multinomial":
            if (X < 0).any():
                raise ClassifierError("multinomial naive Bayes needs nonnegative features")
            return self.log_prior_ + X @ self.feature_log_prob_.T
        jll = np.empty((len(X), 2))
        for c in (0, 1):
            log_norm = -0.5 * np.log(2.0 * np.pi * self.var_[c])
            quad = -0.5 * (X - self.theta_[c]) ** 2 / self.var_[c]
            jll[:, c] = self.log_prior_[c] + (log_norm + quad).sum(axis=1)
        return jll

    def predict(self, X):
        jll = self._joint_log_likelihood(X)
        # strict comparison: a tie resolves to the negative class
        return (jll[:, 1] > jll[:, 0]).astype(np.int64)

    def predict_proba(self, X):
        jll = self._joint_log_likelihood(X)
        shift = jll.max(axis=1, keepdims=True)
        probs = np.exp(jll - shift)
        return probs[:, 1] / probs.sum(axis=1)


# ---------------------------------------------------------------------------
# Serialization: versioned self-describing text formats, one per model kind
# ---------------------------------------------------------------------------


def _floats_line(values):
    return " ".join(repr(float(v)) for v in values)


def _parse_floats(line):
    return np.array([float(v) for v in line.split()], dtype=np.float64)


def _write_tree(node, lines):
    if node.is_leaf:
        lines.append(f"leaf {node.klass} {node.counts[0]} {node.counts[1]}")
    else:
        lines.append(f"node {node.feature} {repr(node.threshold)}")
        _write_tree(node.left, lines)
        _write_tree(node.right, lines)


def _read_tree(lines, pos):
    parts = lines[pos].split()
    if parts[0] == "leaf":
        node = TreeNode(klass=int(parts[1]), counts=(int(parts[2]), int(parts[3])))
        return node, pos + 1
    node = TreeNode(feature=int(parts[1]), threshold=float(parts[2]))
    node.left, pos = _read_tree(lines, pos + 1)
    node.right, pos = _read_tree(lines, pos)
    return node, pos


def save_model(model, path):
    lines = []
    if isinstance(model, LogisticRegressionClassifier):
        lines.append("hatebench-model lr v1")
        lines.append(f"features {len(model.weights)}")
        lines.append(f"bias {repr(float(model.bias))}")
        lines.append("mean " + _floats_line(model.mean_))
        lines.append("std " + _floats_line(model.std_))
        lines.append("weights " + _floats_line(model.weights))
    elif isinstance(model, DecisionTreeClassifier):
        lines.append("hatebench-model dt v1")
        lines.append(f"features {model.n_features_}")
        _write_tree(model.root, lines)
    elif isinstance(model, RandomForestClassifier):
        lines.append("hatebench-model rf v1")
        lines.append(f"features {model.n_features_}")
        lines.append(f"trees {len(model.trees)}")
        for tree in model.trees:
            _write_tree(tree.root, lines)
    elif isinstance(model, NaiveBayesClassifier):
        lines.append(f"hatebench-model nb-{model.fitted_variant} v1")
        lines.append(f"features {model.n_features_}")
        lines.append("logprior " + _floats_line(model.log_prior_))
        if model.fitted_variant == "multinomial":
            for c in (0, 1):
                lines.append(f"logprob{c} " + _floats_line(model.feature_log_prob_[c]))
        else:
            for c in (0, 1):
                lines.append(f"theta{c} " + _floats_line(model.theta_[c]))
                lines.append(f"var{c} " + _floats_line(model.var_[c]))
    else:
        raise ClassifierError(f"cannot serialize {type(model).__name__}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def load_model(path):
    with open(path, encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh]
    if not lines or not lines[0].startswith("hatebench-model "):
        raise ClassifierError(f"not a model file: {path}")
    kind = lines[0].split()[1]
    n_features = int(lines[1].split()[1])
    if kind == "lr":
        model = LogisticRegressionClassifier()
        model.bias = float(lines[2].split()[1])
        model.mean_ = _parse_floats(lines[3].split(" ", 1)[1])
        model.std_ = _parse_floats(lines[4].split(" ", 1)[1])
        model.weights = _parse_floats(lines[5].split(" ", 1)[1])
        return model
    if kind == "dt":
        model = DecisionTreeClassifier()
        model.n_features_ = n_features
        model.root, _ = _read_tree(lines, 2)
        return model
    if kind == "rf":
        model = RandomForestClassifier(n_trees=int(lines[2].split()[1]))
        model.n_features_ = n_features
        pos = 3
        model.trees = []
        for _ in range(model.n_trees):
            tree = DecisionTreeClassifier()
            tree.n_features_ = n_features
            tree.root, pos = _read_tree(lines, pos)
            model.trees.append(tree)
        return model
    if kind.startswith("nb-"):
        model = NaiveBayesClassifier(variant=kind.split("-", 1)[1])
        model.fitted_variant = model.variant
        model.n_features_ = n_features
        model.log_prior_ = _parse_floats(lines[2].split(" ", 1)[1])
        if model.fitted_variant == "multinomial":
            model.feature_log_prob_ = np.vstack(
                [_parse_floats(lines[3].split(" ", 1)[1]), _parse_floats(lines[4].split(" ", 1)[1])]
            )
        else:
            model.theta_ = np.vstack(
                [_parse_floats(lines[3].split(" ", 1)[1]), _parse_floats(lines[5].split(" ", 1)[1])]
            )
            model.var_ = np.vstack(
                [_parse_floats(lines[4].split(" ", 1)[1]), _parse_floats(lines[6].split(" ", 1)[1])]
            )
        return model
    raise ClassifierError(f"unknown model kind {kind!r} in {path}")


CLASSIFIER_KINDS = {
    "lr": LogisticRegressionClassifier,
    "dt": DecisionTreeClassifier,
    "rf": RandomForestClassifier,
    "nb": NaiveBayesClassifier,
}
