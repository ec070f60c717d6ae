"""Metrics, the experiment matrix runner, leakage auditing and reports.

run_experiment enforces train/test hygiene structurally: fitted components
(vocabulary, IDF, embedding models, scaler, classifier) receive only the
train partition, and the test partition is wrapped in an access-counting
guard that must report zero reads during fit phases.  The guard counter is
part of every result's provenance.
"""

from __future__ import annotations

import hashlib
import json
import threading
import unicodedata
from dataclasses import dataclass, field, asdict
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

import numpy as np

from . import classifiers, embeddings, features, neural
from .corpus import (
    DEFAULT_LABEL_MAPPING,
    DatasetSplit,
    Label,
    LabeledDocument,
    binarize_labels,
    load_csv,
    split,
)
from ._rng import shuffled
from .textprep import (
    _data_path,
    clean_corpus,
    load_lemma_exceptions,
    load_stopwords,
    strip_patterns,
    tokenize,
)


class HarnessError(Exception):
    pass


# ---------------------------------------------------------------------------
# Confusion counts and metrics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def total(self):
        return self.tp + self.fp + self.tn + self.fn


def _to_int_labels(labels):
    out = []
    for lab in labels:
        if isinstance(lab, Label):
            out.append(1 if lab is Label.HATE else 0)
        else:
            out.append(int(lab))
    return out


def confusion(pred, truth) -> ConfusionCounts:
    """Tally the confusion counts with hate as the positive class."""
    pred = _to_int_labels(pred)
    truth = _to_int_labels(truth)
    if len(pred) != len(truth):
        raise HarnessError(f"length mismatch: {len(pred)} predictions vs {len(truth)} labels")
    if not pred:
        raise HarnessError("cannot evaluate zero predictions")
    tp = fp = tn = fn = 0
    for p, t in zip(pred, truth):
        if p == 1 and t == 1:
            tp += 1
        elif p == 1 and t == 0:
            fp += 1
        elif p == 0 and t == 0:
            tn += 1
        else:
            fn += 1
    return ConfusionCounts(tp=tp, fp=fp, tn=tn, fn=fn)


@dataclass(frozen=True)
class MetricsReport:
    accuracy: float
    precision: float
    recall: float
    f1: float

    def rendered(self):
        return {
            "Accuracy": fmt4(self.accuracy),
            "Precision": fmt4(self.precision),
            "Recall": fmt4(self.recall),
            "F1": fmt4(self.f1),
        }


def fmt4(value: float) -> str:
    """Render to 4 decimals with half-up rounding (0.83335 -> 0.8334)."""
    return str(Decimal(repr(float(value))).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP))


def metrics(c: ConfusionCounts) -> MetricsReport:
    """Accuracy, precision, recall, F1 with the documented zero rule.

    Precision and recall fall back to 0.0 on a zero denominator, and F1 is
    0.0 when precision + recall is 0; otherwise F1 is their harmonic mean.
    """
    if c.total == 0:
        raise HarnessError("cannot compute metrics over zero rows")
    accuracy = (c.tp + c.tn) / c.total
    precision = c.tp / (c.tp + c.fp) if (c.tp + c.fp) > 0 else 0.0
    recall = c.tp / (c.tp + c.fn) if (c.tp + c.fn) > 0 else 0.0
    f1 = 2 * precision * recall / (precision + recall) if (precision + recall) > 0 else 0.0
    return MetricsReport(accuracy=accuracy, precision=precision, recall=recall, f1=f1)


def metrics_macro(c: ConfusionCounts) -> MetricsReport:
    """Macro average over both classes (available behind a flag; the default
    reports are binary with hate positive)."""
    pos = metrics(c)
    neg = metrics(ConfusionCounts(tp=c.tn, fp=c.fn, tn=c.tp, fn=c.fp))
    return MetricsReport(
        accuracy=pos.accuracy,
        precision=(pos.precision + neg.precision) / 2,
        recall=(pos.recall + neg.recall) / 2,
        f1=(pos.f1 + neg.f1) / 2,
    )


# ---------------------------------------------------------------------------
# Train/test hygiene instrumentation
# ---------------------------------------------------------------------------


class HygieneMonitor:
    """Counts accesses to guarded (test) items that happen inside fit phases."""

    def __init__(self):
        self.fit_depth = 0
        self.violations = 0

    def fit_phase(self):
        monitor = self

        class _Phase:
            def __enter__(self):
                monitor.fit_depth += 1

            def __exit__(self, *exc):
                monitor.fit_depth -= 1

        return _Phase()

    def record_access(self):
        if self.fit_depth > 0:
            self.violations += 1


class GuardedList:
    """Sequence proxy that reports item access to a hygiene monitor."""

    def __init__(self, items, monitor: HygieneMonitor):
        self._items = list(items)
        self._monitor = monitor

    def __len__(self):
        return len(self._items)

    def __getitem__(self, index):
        self._monitor.record_access()
        return self._items[index]

    def __iter__(self):
        for item in self._items:
            self._monitor.record_access()
            yield item


# ---------------------------------------------------------------------------
# Experiment specification
# ---------------------------------------------------------------------------

CLASSICAL_KINDS = ("lr", "dt", "rf", "nb")
SEQUENCE_KINDS = ("bilstm", "bigru")

CLASSIFIER_LABELS = {
    "lr": "LR",
    "dt": "DT",
    "rf": "RF",
    "nb": "NB",
    "bilstm": "Bi-LSTM",
    "bigru": "Bi-GRU",
}

RECIPE_LABELS = {
    "bow": "BoW",
    "tfidf": "TF-IDF",
    "doc2vec": "Doc2Vec",
    "sent2vec": "Sent2Vec",
    "sentiment": "Sentiment",
    "glove": "GloVe",
    "word2vec": "Word2vec",
}


@dataclass
class ExperimentSpec:
    corpus: str = "builtin:toy"
    schema: dict = field(default_factory=lambda: {"text": "tweet", "label": "class"})
    recipe: str = "tfidf+sentiment"
    classifier: str = "lr"
    ratio: float = 0.7
    seed: int = 7
    params: dict = field(default_factory=dict)
    sentiment_on_clean: bool = False
    keep_hashtag_text: bool = False
    doc2vec_transductive: bool = False
    stratify: bool = False
    macro_metrics: bool = False

    def recipe_parts(self):
        return tuple(part.strip() for part in self.recipe.split("+") if part.strip())

    def features_label(self):
        return "+".join(RECIPE_LABELS.get(p, p) for p in self.recipe_parts())

    def canonical(self) -> dict:
        data = asdict(self)
        data["params"] = dict(sorted(self.params.items()))
        return data

    def spec_hash(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()[:16]


@dataclass
class ExperimentResult:
    classifier_label: str
    features_label: str
    report: MetricsReport
    width: int
    provenance: dict


def resolve_corpus_path(ref: str) -> Path:
    if ref == "builtin:toy":
        return _data_path("toy_corpus.csv")
    return Path(ref)


def resolve_glove_path(ref: str) -> Path:
    if ref in ("builtin:toy_glove", None):
        return _data_path("toy_glove.txt")
    return Path(ref)


def load_corpus(spec: ExperimentSpec):
    path = resolve_corpus_path(spec.corpus)
    result = load_csv(path, spec.schema)
    return binarize_labels(result.records, DEFAULT_LABEL_MAPPING)


# ---------------------------------------------------------------------------
# Feature assembly for classical cells
# ---------------------------------------------------------------------------


class FeatureCache:
    """Per-matrix-run memo of deterministic feature computations.

    Keyed by a component signature; thread-safe so --jobs N can share it.
    Sharing never changes numbers because every cached computation is a
    pure function of (split, params, seed).
    """

    def __init__(self):
        self._store = {}
        self._lock = threading.Lock()

    def get_or_compute(self, key, compute):
        with self._lock:
            entry = self._store.get(key)
            if entry is None:
                entry = {"event": threading.Event(), "value": None, "error": None}
                self._store[key] = entry
                owner = True
            else:
                owner = False
        if owner:
            try:
                entry["value"] = compute()
            except BaseException as exc:
                entry["error"] = exc
                raise
            finally:
                entry["event"].set()
            return entry["value"]
        entry["event"].wait()
        if entry["error"] is not None:
            raise entry["error"]
        return entry["value"]


def _doc_label_int(doc):
    return 1 if doc.label is Label.HATE else 0


def _param(spec, name, default):
    return spec.params.get(name, default)


def _component_key(spec, component):
    relevant = {
        "bow": ("ngram_min", "ngram_max", "max_features", "rank_by"),
        "tfidf": ("ngram_min", "ngram_max", "max_features", "rank_by"),
        "doc2vec": ("d2v_dim", "d2v_window", "d2v_negatives", "d2v_epochs", "d2v_infer_steps"),
        "sent2vec": ("sent2vec_source", "sent2vec_dim"),
        "sentiment": ("lexicon",),
    }[component]
    vals = tuple((k, spec.params.get(k)) for k in relevant)
    return (component, vals, spec.seed, spec.ratio, spec.corpus, spec.stratify,
            spec.doc2vec_transductive, spec.sentiment_on_clean, spec.keep_hashtag_text)


def _build_component(spec, component, ctx, monitor, cache):
    """Returns (train FeatureMatrix, test FeatureMatrix) for one recipe part."""

    def compute():
        if component in ("bow", "tfidf"):
            n_min = _param(spec, "ngram_min", 1)
            n_max = _param(spec, "ngram_max", 6)
            cap = _param(spec, "max_features", 1000)
            rank_by = _param(spec, "rank_by", "total")
            with monitor.fit_phase():
                vocab = features.fit_vocabulary(ctx["train_seqs"], n_min, n_max, cap, rank_by)
                idf = features.compute_idf(vocab) if component == "tfidf" else None
            if component == "bow":
                tr = features.bow_matrix(ctx["train_seqs"], vocab)
                te = features.bow_matrix(list(ctx["test_seqs"]), vocab)
            else:
                tr = features.tfidf_matrix(ctx["train_seqs"], vocab, idf)
                te = features.tfidf_matrix(list(ctx["test_seqs"]), vocab, idf)
            return tr, te

        if component == "doc2vec":
            dim = _param(spec, "d2v_dim", 500)
            window = _param(spec, "d2v_window", 5)
            negatives = _param(spec, "d2v_negatives", 5)
            epochs = _param(spec, "d2v_epochs", 20)
            steps = _param(spec, "d2v_infer_steps", 50)
            with monitor.fit_phase():
                if spec.doc2vec_transductive:
                    # deliberately leaky variant kept for the audit; the
                    # guard on test_seqs records these accesses
                    fit_seqs = ctx["train_seqs"] + list(ctx["test_seqs"])
                else:
                    fit_seqs = ctx["train_seqs"]
                model = embeddings.train_doc2vec(
                    fit_seqs, dim=dim, window=window, negatives=negatives,
                    epochs=epochs, seed=spec.seed,
                )
            labels = tuple(f"doc2vec:{k}" for k in range(dim))

            def matrix(seqs):
                # training docs use their stored vectors; unseen docs are
                # inferred against frozen word matrices
                rows = []
                for s in seqs:
                    vec = model.doc_vectors.get(s.doc_id)
                    if vec is None:
                        vec = embeddings.infer_doc_vector(model, s.tokens, steps=steps, seed=spec.seed)
                    rows.append(vec)
                return features.FeatureMatrix(
                    values=np.vstack(rows),
                    column_labels=labels,
                    doc_ids=tuple(s.doc_id for s in seqs),
                )

            return matrix(ctx["train_seqs"]), matrix(list(ctx["test_seqs"]))

        if component == "sent2vec":
            source = _param(spec, "sent2vec_source", "fake")
            if source == "fake":
                dim = _param(spec, "sent2vec_dim", 1024)
                all_ids = [d.id for d in ctx["all_docs"]]
                ids_sig = hashlib.sha256("\n".join(all_ids).encode()).hexdigest()[:8]
                path = ctx["workdir"] / f"fake_sent2vec_{spec.seed}_{ids_sig}.txt"
                if not path.exists():
                    embeddings.write_fake_sentence_embeddings(all_ids, path, dim=dim, seed=spec.seed)
                emb = embeddings.load_sentence_embeddings(path)
            else:
                emb = embeddings.load_sentence_embeddings(resolve_corpus_path(source))
            labels = tuple(f"sent2vec:{k}" for k in range(emb.dim))

            def matrix(docs):
                rows = []
                ids = []
                for d in docs:
                    if d.id not in emb.rows:
                        raise HarnessError(f"sentence embedding missing for doc id {d.id!r}")
                    rows.append(emb.rows[d.id])
                    ids.append(d.id)
                return features.FeatureMatrix(
                    values=np.vstack(rows), column_labels=labels, doc_ids=tuple(ids)
                )

            return matrix(ctx["train_docs"]), matrix(list(ctx["test_docs"]))

        if component == "sentiment":
            lexicon = features.load_lexicon(_param(spec, "lexicon", None))
            if spec.sentiment_on_clean:
                tr = features.sentiment_matrix(ctx["train_seqs"], lexicon)
                te = features.sentiment_matrix(list(ctx["test_seqs"]), lexicon)
            else:
                # lightly cleaned text: pattern-stripped and tokenized, but
                # before stopword removal so negators survive
                def light(docs):
                    rows, ids = [], []
                    for d in docs:
                        toks = tokenize(strip_patterns(d.text, spec.keep_hashtag_text))
                        rows.append(features.sentiment_score(toks, lexicon))
                        ids.append(d.id)
                    return features.FeatureMatrix(
                        values=np.asarray(rows).reshape(-1, 1),
                        column_labels=("sentiment",),
                        doc_ids=tuple(ids),
                    )

                tr = light(ctx["train_docs"])
                te = light(list(ctx["test_docs"]))
            return tr, te

        raise HarnessError(f"unknown recipe component {component!r}")

    if cache is None:
        return compute()
    return cache.get_or_compute(_component_key(spec, component), compute)


def _make_classifier(spec):
    kind = spec.classifier
    p = spec.params
    if kind == "lr":
        return classifiers.LogisticRegressionClassifier(
            learning_rate=p.get("lr_rate", 0.1), epochs=p.get("lr_epochs", 300),
            l2=p.get("lr_l2", 1e-4), seed=spec.seed,
        )
    if kind == "dt":
        return classifiers.DecisionTreeClassifier(
            max_depth=p.get("dt_max_depth"), min_samples_split=p.get("dt_min_samples_split", 2),
            min_impurity_decrease=p.get("dt_min_impurity_decrease", 0.0),
        )
    if kind == "rf":
        return classifiers.RandomForestClassifier(
            n_trees=p.get("rf_trees", 100), max_features=p.get("rf_max_features", "sqrt"),
            bootstrap=p.get("rf_bootstrap", True), seed=spec.seed,
            max_depth=p.get("dt_max_depth"),
        )
    if kind == "nb":
        return classifiers.NaiveBayesClassifier(variant=p.get("nb_variant", "auto"))
    raise HarnessError(f"unknown classifier kind {kind!r}")


def _run_classical(spec, ctx, monitor, cache):
    parts_train = []
    parts_test = []
    for component in spec.recipe_parts():
        tr, te = _build_component(spec, component, ctx, monitor, cache)
        parts_train.append(tr)
        parts_test.append(te)
    X_train = features.concat_features(parts_train)
    X_test = features.concat_features(parts_test)
    y_train = np.array([_doc_label_int(d) for d in ctx["train_docs"]])
    y_test = np.array([_doc_label_int(d) for d in list(ctx["test_docs"])])

    model = _make_classifier(spec)
    with monitor.fit_phase():
        model.fit(X_train.values, y_train)
    pred = model.predict(X_test.values)
    return pred, y_test, X_train.width, model


def _run_sequence(spec, ctx, monitor, cache):
    p = spec.params
    emb_source = spec.recipe_parts()[0]
    if emb_source == "word2vec":

        def train_table():
            with monitor.fit_phase():
                return embeddings.train_word2vec(
                    ctx["train_seqs"],
                    dim=p.get("w2v_dim", 100), window=p.get("w2v_window", 5),
                    negatives=p.get("w2v_negatives", 5), epochs=p.get("w2v_epochs", 20),
                    seed=spec.seed,
                )

        key = ("word2vec-table",
               tuple((k, p.get(k)) for k in ("w2v_dim", "w2v_window", "w2v_negatives", "w2v_epochs")),
               spec.seed, spec.ratio, spec.corpus, spec.stratify)
        table = cache.get_or_compute(key, train_table) if cache else train_table()
    elif emb_source == "glove":
        table = embeddings.load_glove(resolve_glove_path(p.get("glove_path", "builtin:toy_glove")))
    else:
        raise HarnessError(f"sequence models need an embedding recipe, got {spec.recipe!r}")

    vocab = neural.build_sequence_vocab(tok for tok in table.vectors)
    kind = "gru" if spec.classifier == "bigru" else "lstm"
    model = neural.init_model(
        kind, vocab,
        hidden=p.get("hidden", 64), max_len=p.get("max_len", 50),
        seed=spec.seed, embeddings=table,
    )
    y_train = np.array([_doc_label_int(d) for d in ctx["train_docs"]])
    y_test = np.array([_doc_label_int(d) for d in list(ctx["test_docs"])])
    batches = neural.make_batches(
        ctx["train_seqs"], y_train, vocab, model.max_len, p.get("batch_size", 32)
    )
    with monitor.fit_phase():
        neural.bptt_train(
            model, batches,
            epochs=p.get("nn_epochs", 10), lr=p.get("nn_lr", 0.05),
            momentum=p.get("momentum", 0.9), clip=p.get("clip", 5.0),
        )
    pred = neural.predict(model, list(ctx["test_seqs"]))
    width = model.embed_dim
    return pred, y_test, width, model


def run_experiment(spec: ExperimentSpec, docs=None, cache=None, workdir=None, return_model=False):
    """Split, fit on train only, transform both sides, evaluate on test.

    Raises on hygiene violations unless the spec explicitly asked for the
    transductive (leaky) variant, in which case the count is surfaced in
    the provenance record instead.
    """
    if docs is None:
        docs = load_corpus(spec)
    split_result = split(list(docs), spec.ratio, spec.seed, stratify=spec.stratify)
    return run_experiment_on_split(spec, split_result, cache=cache, workdir=workdir, return_model=return_model)


def run_experiment_on_split(spec, split_result, cache=None, workdir=None, return_model=False):
    monitor = HygieneMonitor()
    stoplist = load_stopwords()
    exceptions = load_lemma_exceptions()

    train_docs = list(split_result.train)
    test_docs = GuardedList(split_result.test, monitor)
    train_seqs = clean_corpus(train_docs, stoplist, exceptions, spec.keep_hashtag_text).sequences
    test_seqs = GuardedList(
        clean_corpus(list(test_docs), stoplist, exceptions, spec.keep_hashtag_text).sequences,
        monitor,
    )
    if workdir is None:
        import tempfile

        workdir = tempfile.mkdtemp(prefix="hatebench-")
    Path(workdir).mkdir(parents=True, exist_ok=True)
    ctx = {
        "all_docs": list(split_result.train) + list(split_result.test),
        "train_docs": train_docs,
        "test_docs": test_docs,
        "train_seqs": train_seqs,
        "test_seqs": test_seqs,
        "workdir": Path(workdir),
    }

    if spec.classifier in SEQUENCE_KINDS:
        pred, y_test, width, model = _run_sequence(spec, ctx, monitor, cache)
    elif spec.classifier in CLASSICAL_KINDS:
        pred, y_test, width, model = _run_classical(spec, ctx, monitor, cache)
    else:
        raise HarnessError(f"unknown classifier kind {spec.classifier!r}")

    if monitor.violations and not spec.doc2vec_transductive:
        raise HarnessError(
            f"train/test contamination: {monitor.violations} test-document accesses during fit"
        )
    c = confusion(pred, y_test)
    report = metrics_macro(c) if spec.macro_metrics else metrics(c)
    provenance = {
        "spec_hash": spec.spec_hash(),
        "seed": spec.seed,
        "ratio": spec.ratio,
        "recipe": spec.recipe,
        "classifier": spec.classifier,
        "width": width,
        "train_rows": len(train_docs),
        "test_rows": len(y_test),
        "hygiene_violations": monitor.violations,
        "metrics_averaging": "macro" if spec.macro_metrics else "binary-hate-positive",
    }
    result = ExperimentResult(
        classifier_label=CLASSIFIER_LABELS[spec.classifier],
        features_label=spec.features_label(),
        report=report,
        width=width,
        provenance=provenance,
    )
    if return_model:
        return result, model
    return result


# ---------------------------------------------------------------------------
# The experiment matrix
# ---------------------------------------------------------------------------


@dataclass
class ResultRow:
    classifier_label: str
    features_label: str
    report: MetricsReport | None = None
    width: int | None = None
    error: str | None = None
    provenance: dict = field(default_factory=dict)


@dataclass
class ResultTable:
    rows: list
    title: str = "results"

    def __len__(self):
        return len(self.rows)


def run_matrix(specs, jobs=1, workdir=None) -> ResultTable:
    """One row per spec, in spec order; per-cell failures become ERROR rows."""
    specs = list(specs)
    if not specs:
        raise HarnessError("matrix needs at least one experiment spec")
    cache = FeatureCache()
    docs_cache = {}

    def docs_for(spec):
        key = (spec.corpus, json.dumps(spec.schema, sort_keys=True))
        if key not in docs_cache:
            docs_cache[key] = load_corpus(spec)
        return docs_cache[key]

    for spec in specs:
        docs_for(spec)  # sequential preload keeps file IO out of the pool

    def run_cell(spec):
        try:
            result = run_experiment(spec, docs=docs_for(spec), cache=cache, workdir=workdir)
            return ResultRow(
                classifier_label=result.classifier_label,
                features_label=result.features_label,
                report=result.report,
                width=result.width,
                provenance=result.provenance,
            )
        except Exception as exc:  # per-cell isolation: the matrix continues
            return ResultRow(
                classifier_label=CLASSIFIER_LABELS.get(spec.classifier, spec.classifier),
                features_label=spec.features_label(),
                error=f"{type(exc).__name__}: {exc}",
            )

    if jobs <= 1:
        rows = [run_cell(spec) for spec in specs]
    else:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(run_cell, specs))
    return ResultTable(rows=rows)


# ---------------------------------------------------------------------------
# Preset files: plain-text key-value blocks
# ---------------------------------------------------------------------------


def _parse_blocks(text):
    blocks = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = {"__section__": line[1:-1].strip().lower()}
            blocks.append(current)
            continue
        if current is None or "=" not in line:
            raise HarnessError(f"preset syntax error on line {lineno}: {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        current[key.lower()] = value
    return blocks


_INT_PARAMS = {
    "ngram_min", "ngram_max", "max_features", "d2v_dim", "d2v_window", "d2v_negatives",
    "d2v_epochs", "d2v_infer_steps", "sent2vec_dim", "w2v_dim", "w2v_window", "w2v_negatives",
    "w2v_epochs", "hidden", "max_len", "batch_size", "nn_epochs", "rf_trees", "lr_epochs",
    "dt_max_depth", "dt_min_samples_split",
}
_FLOAT_PARAMS = {"lr_rate", "lr_l2", "nn_lr", "momentum", "clip", "dt_min_impurity_decrease"}


def _coerce_param(key, value):
    if key in _INT_PARAMS:
        return int(value)
    if key in _FLOAT_PARAMS:
        return float(value)
    return value


def load_preset(path, corpus=None, seed=None, ratio=None):
    """Expand a preset file into an ordered list of ExperimentSpec."""
    path = Path(path)
    if not path.exists():
        raise HarnessError(f"preset file not found: {path}")
    blocks = _parse_blocks(path.read_text(encoding="utf-8"))
    defaults = {}
    specs = []
    for block in blocks:
        section = block.pop("__section__")
        if section == "defaults":
            defaults.update(block)
            continue
        if section != "table":
            raise HarnessError(f"unknown preset section [{section}]")
        merged = dict(defaults)
        merged.update(block)
        kinds = merged.pop("classifiers", "lr dt rf nb").replace(",", " ").split()
        recipe = merged.pop("features", None) or merged.pop("embedding", None)
        if recipe is None:
            raise HarnessError("preset table block needs features= or embedding=")
        merged.pop("name", None)
        spec_corpus = corpus or merged.pop("corpus", "builtin:toy")
        merged.pop("corpus", None)
        spec_ratio = ratio if ratio is not None else float(merged.pop("ratio", 0.7))
        merged.pop("ratio", None)
        spec_seed = seed if seed is not None else int(merged.pop("seed", 7))
        merged.pop("seed", None)
        schema_text = merged.pop("schema_text", "tweet")
        schema_label = merged.pop("schema_label", "class")
        params = {k: _coerce_param(k, v) for k, v in merged.items()}
        for kind in kinds:
            specs.append(
                ExperimentSpec(
                    corpus=spec_corpus,
                    schema={"text": schema_text, "label": schema_label},
                    recipe=recipe,
                    classifier=kind,
                    ratio=spec_ratio,
                    seed=spec_seed,
                    params=dict(params),
                )
            )
    return specs


def builtin_preset_path(name: str) -> Path:
    return _data_path(f"presets/{name}.preset")


# ---------------------------------------------------------------------------
# Leakage audit
# ---------------------------------------------------------------------------


@dataclass
class LeakageAudit:
    exact_duplicates: int
    near_duplicates: int
    train_hate: int
    train_nonhate: int
    test_hate: int
    test_nonhate: int

    def to_dict(self):
        return asdict(self)


def leakage_audit(split_result: DatasetSplit) -> LeakageAudit:
    """Count test documents that leak from train: byte-identical text after
    NFC normalization, and near-duplicates (identical cleaned tokens)."""
    train = list(split_result.train)
    test = list(split_result.test)
    train_texts = {unicodedata.normalize("NFC", d.text) for d in train}
    exact = sum(1 for d in test if unicodedata.normalize("NFC", d.text) in train_texts)
    cleaned_train = clean_corpus(train)
    cleaned_test = clean_corpus(test)
    train_tokens = {seq.tokens for seq in cleaned_train.sequences}
    near = sum(1 for seq in cleaned_test.sequences if seq.tokens in train_tokens)
    return LeakageAudit(
        exact_duplicates=exact,
        near_duplicates=near,
        train_hate=sum(1 for d in train if d.label is Label.HATE),
        train_nonhate=sum(1 for d in train if d.label is Label.NONHATE),
        test_hate=sum(1 for d in test if d.label is Label.HATE),
        test_nonhate=sum(1 for d in test if d.label is Label.NONHATE),
    )


def plant_duplicates(split_result: DatasetSplit, fraction=0.3, seed=99) -> DatasetSplit:
    """Replace a fraction of test documents with copies of train documents.

    Returns a new split with exactly floor(fraction * |test|) planted
    cross-split duplicates; used to demonstrate how leakage inflates test
    scores.
    """
    train = list(split_result.train)
    test = list(split_result.test)
    n_plant = int(fraction * len(test))
    donor_order = shuffled(range(len(train)), seed)
    victim_order = shuffled(range(len(test)), seed + 1)
    planted = list(test)
    for k in range(n_plant):
        donor = train[donor_order[k % len(train)]]
        planted[victim_order[k]] = LabeledDocument(
            id=f"planted:{k}:{donor.id}", text=donor.text, label=donor.label
        )
    return DatasetSplit(
        train=tuple(train), test=tuple(planted), ratio=split_result.ratio, seed=split_result.seed
    )


# ---------------------------------------------------------------------------
# Report emission
# ---------------------------------------------------------------------------


def emit_report(table: ResultTable, fmt: str, path) -> Path:
    """CSV (Classifier,Features,Accuracy,Precision,Recall,F1) or a Markdown
    pipe table; metric values at 4 decimals, half-up."""
    if not table.rows:
        raise HarnessError("refusing to emit an empty report")
    path = Path(path)
    if fmt == "csv":
        lines = ["Classifier,Features,Accuracy,Precision,Recall,F1"]
        for row in table.rows:
            if row.error:
                cells = [row.classifier_label, row.features_label, "ERROR", "ERROR", "ERROR", "ERROR"]
            else:
                r = row.report.rendered()
                cells = [row.classifier_label, row.features_label,
                         r["Accuracy"], r["Precision"], r["Recall"], r["F1"]]
            lines.append(",".join(cells))
    elif fmt == "markdown":
        lines = [
            "| Classifier | Features | Accuracy | Precision | Recall | F1 Score |",
            "| --- | --- | --- | --- | --- | --- |",
        ]
        for row in table.rows:
            if row.error:
                cells = [row.classifier_label, row.features_label, "ERROR", "ERROR", "ERROR", "ERROR"]
            else:
                r = row.report.rendered()
                cells = [row.classifier_label, row.features_label,
                         r["Accuracy"], r["Precision"], r["Recall"], r["F1"]]
            lines.append("| " + " | ".join(cells) + " |")
    else:
        raise HarnessError(f"unknown report format {fmt!r}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def parse_report_csv(path) -> ResultTable:
    """Read back a CSV report emitted by emit_report."""
    rows = []
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != "Classifier,Features,Accuracy,Precision,Recall,F1":
        raise HarnessError(f"not a report CSV: {path}")
    for line in lines[1:]:
        cells = line.split(",")
        if cells[2] == "ERROR":
            rows.append(ResultRow(classifier_label=cells[0], features_label=cells[1], error="ERROR"))
        else:
            rows.append(
                ResultRow(
                    classifier_label=cells[0],
                    features_label=cells[1],
                    report=MetricsReport(
                        accuracy=float(cells[2]), precision=float(cells[3]),
                        recall=float(cells[4]), f1=float(cells[5]),
                    ),
                )
            )
    return ResultTable(rows=rows)


def write_provenance(table: ResultTable, path, extra=None) -> Path:
    record = {
        "rows": [
            {
                "classifier": row.classifier_label,
                "features": row.features_label,
                "error": row.error,
                **({"metrics": row.report.rendered()} if row.report else {}),
                **({"width": row.width} if row.width else {}),
                **({"hygiene_violations": row.provenance.get("hygiene_violations")}
                   if row.provenance else {}),
                **({"spec_hash": row.provenance.get("spec_hash")} if row.provenance else {}),
            }
            for row in table.rows
        ],
    }
    if extra:
        record.update(extra)
    path = Path(path)
    path.write_text(json.dumps(record, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def sha256_file(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()
