"""Command-line surface: clean | featurize | train | run | matrix | audit |
export-model.

Exit codes: 0 success, 1 when a matrix finished with per-cell failures,
2 for configuration errors (bad flags, unreadable inputs).  Every command
writes a manifest of input hashes next to its outputs; no environment
variables are consulted, all behavior is driven by flags and seeds.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import classifiers, evalharness, features, neural
from .corpus import DEFAULT_LABEL_MAPPING, DatasetSplit, binarize_labels, load_csv, load_split
from .evalharness import (
    ExperimentSpec,
    HarnessError,
    ResultRow,
    ResultTable,
    builtin_preset_path,
    emit_report,
    leakage_audit,
    load_corpus,
    load_preset,
    run_experiment,
    run_matrix,
    sha256_file,
    write_provenance,
)
from .plots import render_report_figures
from .textprep import clean_corpus, load_lemma_exceptions, load_stopwords


class CliError(Exception):
    pass


def _write_manifest(out_dir, inputs, outputs, flags):
    manifest = {
        "inputs": {str(p): sha256_file(p) for p in inputs if Path(p).exists()},
        "outputs": [str(Path(p).name) for p in outputs],
        "flags": flags,
    }
    path = Path(out_dir) / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def _schema(args):
    return {"text": args.schema_text, "label": args.schema_label}


def _load_docs(path, args):
    if not Path(path).exists() and path != "builtin:toy":
        raise CliError(f"input file not found: {path}")
    result = load_csv(evalharness.resolve_corpus_path(path), _schema(args))
    return binarize_labels(result.records, DEFAULT_LABEL_MAPPING), result


def _spec_from_args(args, recipe=None, classifier=None):
    return ExperimentSpec(
        corpus=args.corpus,
        schema=_schema(args),
        recipe=recipe or args.recipe,
        classifier=classifier or args.clf,
        ratio=args.ratio,
        seed=args.seed,
        params=dict(args.param or {}),
        sentiment_on_clean=args.sentiment_on_clean,
        keep_hashtag_text=args.keep_hashtag_text,
        doc2vec_transductive=getattr(args, "doc2vec_transductive", False),
        stratify=args.stratify,
        macro_metrics=getattr(args, "macro_metrics", False),
    )


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_clean(args) -> int:
    docs, _ = _load_docs(args.infile, args)
    stoplist = load_stopwords(args.stopwords) if args.stopwords else load_stopwords()
    result = clean_corpus(docs, stoplist, load_lemma_exceptions(), args.keep_hashtag_text)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "tokens"])
        for seq in result.sequences:
            writer.writerow([seq.doc_id, " ".join(seq.tokens)])
    print(f"cleaned {len(result.sequences)} documents -> {out}")
    if result.empty_ids:
        print(f"note: {len(result.empty_ids)} document(s) cleaned to zero tokens")
    _write_manifest(out.parent, [args.infile], [out], {"keep_hashtag_text": args.keep_hashtag_text})
    return 0


def cmd_featurize(args) -> int:
    docs, _ = _load_docs(args.infile, args)
    stoplist = load_stopwords()
    cleaned = clean_corpus(docs, stoplist, load_lemma_exceptions(), args.keep_hashtag_text)
    parts = []
    recipe = tuple(p.strip() for p in args.recipe.split("+") if p.strip())
    for component in recipe:
        if component in ("bow", "tfidf"):
            vocab = features.fit_vocabulary(
                cleaned.sequences, args.ngram_min, args.ngram_max, args.max_features
            )
            if args.vocab_out:
                features.save_vocabulary(vocab, args.vocab_out)
            if component == "bow":
                parts.append(features.bow_matrix(cleaned.sequences, vocab))
            else:
                parts.append(features.tfidf_matrix(cleaned.sequences, vocab, features.compute_idf(vocab)))
        elif component == "sentiment":
            lexicon = features.load_lexicon()
            if args.sentiment_on_clean:
                parts.append(features.sentiment_matrix(cleaned.sequences, lexicon))
            else:
                parts.append(features.sentiment_matrix(docs, lexicon))
        else:
            raise CliError(f"featurize supports bow/tfidf/sentiment recipes, got {component!r}")
    matrix = features.concat_features(parts)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    features.export_matrix_csv(matrix, out)
    print(f"wrote {matrix.values.shape[0]}x{matrix.width} feature matrix -> {out}")
    _write_manifest(out.parent, [args.infile], [out], {"recipe": args.recipe})
    return 0


def cmd_train(args) -> int:
    spec = _spec_from_args(args)
    result, model = run_experiment(spec, workdir=Path(args.model_out).parent, return_model=True)
    out = Path(args.model_out)
    out.parent.mkdir(parents=True, exist_ok=True)
    if spec.classifier in evalharness.SEQUENCE_KINDS:
        neural.save_checkpoint(model, out)
    else:
        classifiers.save_model(model, out)
    print(f"{result.classifier_label} on {result.features_label}: "
          + " ".join(f"{k}={v}" for k, v in result.report.rendered().items()))
    print(f"model saved -> {out}")
    _write_manifest(out.parent, [evalharness.resolve_corpus_path(spec.corpus)], [out],
                    {"recipe": spec.recipe, "classifier": spec.classifier, "seed": spec.seed})
    return 0


def cmd_export_model(args) -> int:
    # final-artifact export: fit on the full corpus, no held-out evaluation
    docs, _ = _load_docs(args.corpus, args)
    spec = _spec_from_args(args)
    out = Path(args.model_out)
    out.parent.mkdir(parents=True, exist_ok=True)
    # the whole corpus becomes the train side; the single-doc test side only
    # satisfies the runner's shape and its metrics are discarded
    all_split = DatasetSplit(train=tuple(docs), test=tuple(docs[:1]), ratio=1.0, seed=spec.seed)
    result, model = evalharness.run_experiment_on_split(
        spec, all_split, workdir=out.parent, return_model=True
    )
    if spec.classifier in evalharness.SEQUENCE_KINDS:
        neural.save_checkpoint(model, out)
    else:
        classifiers.save_model(model, out)
    print(f"exported {result.classifier_label} ({result.features_label}, fit on all "
          f"{len(docs)} documents) -> {out}")
    _write_manifest(out.parent, [evalharness.resolve_corpus_path(spec.corpus)], [out],
                    {"recipe": spec.recipe, "classifier": spec.classifier, "seed": spec.seed})
    return 0


def _emit_all(table, out_dir, seed, flags, inputs):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = emit_report(table, "csv", out_dir / "report.csv")
    md_path = emit_report(table, "markdown", out_dir / "report.md")
    figures = render_report_figures(table, out_dir)
    prov_path = write_provenance(table, out_dir / "provenance.json", extra={"seed": seed})
    outputs = [csv_path, md_path, prov_path, *figures]
    _write_manifest(out_dir, inputs, outputs, flags)
    return csv_path


def cmd_run(args) -> int:
    spec = _spec_from_args(args)
    result = run_experiment(spec, workdir=args.out_dir)
    table = ResultTable(rows=[ResultRow(
        classifier_label=result.classifier_label,
        features_label=result.features_label,
        report=result.report,
        width=result.width,
        provenance=result.provenance,
    )])
    csv_path = _emit_all(
        table, args.out_dir, args.seed,
        {"recipe": spec.recipe, "classifier": spec.classifier, "seed": spec.seed,
         "ratio": spec.ratio},
        [evalharness.resolve_corpus_path(spec.corpus)],
    )
    print(f"1 cell -> {csv_path}")
    for row in table.rows:
        print(f"  {row.classifier_label} / {row.features_label}: "
              + " ".join(f"{k}={v}" for k, v in row.report.rendered().items()))
    return 0


def cmd_matrix(args) -> int:
    preset_path = Path(args.preset)
    if not preset_path.exists():
        preset_path = builtin_preset_path(args.preset)
    specs = load_preset(preset_path, corpus=args.corpus, seed=args.seed, ratio=args.ratio)
    for spec in specs:
        spec.sentiment_on_clean = args.sentiment_on_clean
        spec.keep_hashtag_text = args.keep_hashtag_text
        spec.doc2vec_transductive = args.doc2vec_transductive
        spec.stratify = args.stratify
        spec.macro_metrics = args.macro_metrics
    table = run_matrix(specs, jobs=args.jobs, workdir=args.out_dir)
    csv_path = _emit_all(
        table, args.out_dir, args.seed,
        {"preset": str(preset_path), "seed": args.seed, "jobs": args.jobs},
        [preset_path, evalharness.resolve_corpus_path(specs[0].corpus)],
    )
    errors = sum(1 for row in table.rows if row.error)
    print(f"{len(table.rows)} cells ({errors} failed) -> {csv_path}")
    return 1 if errors else 0


def cmd_audit(args) -> int:
    train_docs, test_docs = load_split(args.split_dir)
    audit = leakage_audit(DatasetSplit(
        train=tuple(train_docs), test=tuple(test_docs),
        ratio=len(train_docs) / max(1, len(train_docs) + len(test_docs)), seed=0,
    ))
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(audit.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"exact duplicates: {audit.exact_duplicates}")
    print(f"near duplicates (identical cleaned tokens): {audit.near_duplicates}")
    print(f"class balance train hate/nonhate: {audit.train_hate}/{audit.train_nonhate}")
    print(f"class balance test  hate/nonhate: {audit.test_hate}/{audit.test_nonhate}")
    print(f"audit -> {out}")
    _write_manifest(out.parent, [Path(args.split_dir) / "train.csv", Path(args.split_dir) / "test.csv"],
                    [out], {})
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


class _ParamAction(argparse.Action):
    def __call__(self, parser, namespace, value, option_string=None):
        store = getattr(namespace, self.dest) or {}
        if "=" not in value:
            raise argparse.ArgumentError(self, f"expected key=value, got {value!r}")
        key, raw = value.split("=", 1)
        store[key.strip()] = evalharness._coerce_param(key.strip(), raw.strip())
        setattr(namespace, self.dest, store)


def _add_common_corpus_flags(sub):
    sub.add_argument("--corpus", default="builtin:toy",
                     help="corpus CSV path or builtin:toy (default)")
    sub.add_argument("--schema-text", default="tweet", help="text column name")
    sub.add_argument("--schema-label", default="class", help="label column name")


def _add_common_run_flags(sub):
    sub.add_argument("--seed", type=int, default=7, help="split/init seed")
    sub.add_argument("--ratio", type=float, default=0.7, help="train fraction")
    sub.add_argument("--param", action=_ParamAction, metavar="KEY=VALUE",
                     help="hyperparameter override (repeatable)")
    sub.add_argument("--sentiment-on-clean", action="store_true",
                     help="score sentiment on fully cleaned tokens instead of lightly cleaned text")
    sub.add_argument("--keep-hashtag-text", action="store_true",
                     help="keep hashtag words, dropping only the # sign")
    sub.add_argument("--stratify", action="store_true", help="stratified split")
    sub.add_argument("--macro-metrics", action="store_true",
                     help="macro-averaged metrics instead of binary hate-positive")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hatebench",
        description="From-scratch text-classification benchmarking toolkit",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("clean", help="clean a corpus CSV into id,tokens rows")
    p.add_argument("--in", dest="infile", required=True, help="input corpus CSV")
    p.add_argument("--out", required=True, help="output cleaned CSV")
    p.add_argument("--stopwords", help="custom stopword file")
    p.add_argument("--keep-hashtag-text", action="store_true")
    _add_common_corpus_flags(p)
    p.set_defaults(func=cmd_clean)

    p = subs.add_parser("featurize", help="fit and export a feature matrix CSV")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--recipe", default="tfidf", help="bow/tfidf/sentiment recipe, '+'-joined")
    p.add_argument("--vocab-out", help="write the fitted vocabulary TSV here")
    p.add_argument("--ngram-min", type=int, default=1)
    p.add_argument("--ngram-max", type=int, default=6)
    p.add_argument("--max-features", type=int, default=1000)
    p.add_argument("--sentiment-on-clean", action="store_true")
    p.add_argument("--keep-hashtag-text", action="store_true")
    _add_common_corpus_flags(p)
    p.set_defaults(func=cmd_featurize)

    p = subs.add_parser("train", help="train on a seeded split, report test metrics, save the model")
    p.add_argument("--recipe", required=True)
    p.add_argument("--clf", required=True, choices=list(evalharness.CLASSIFIER_LABELS))
    p.add_argument("--model-out", required=True)
    p.add_argument("--doc2vec-transductive", action="store_true",
                   help="deliberately leaky doc2vec fit (for leakage studies)")
    _add_common_corpus_flags(p)
    _add_common_run_flags(p)
    p.set_defaults(func=cmd_train)

    p = subs.add_parser("run", help="run one experiment cell and emit report files")
    p.add_argument("--recipe", required=True,
                   help="'+'-joined recipe (bow/tfidf/doc2vec/sent2vec/sentiment) "
                        "or embedding source (glove/word2vec) for neural classifiers")
    p.add_argument("--clf", required=True, choices=list(evalharness.CLASSIFIER_LABELS))
    p.add_argument("--out-dir", required=True)
    p.add_argument("--doc2vec-transductive", action="store_true")
    _add_common_corpus_flags(p)
    _add_common_run_flags(p)
    p.set_defaults(func=cmd_run)

    p = subs.add_parser("matrix", help="run a preset matrix of experiments")
    p.add_argument("--preset", default="paper_matrix",
                   help="preset name (bundled) or path to a preset file")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--jobs", type=int, default=1, help="parallel cells (deterministic output)")
    p.add_argument("--doc2vec-transductive", action="store_true")
    p.add_argument("--corpus", default=None, help="override the preset corpus")
    p.add_argument("--schema-text", default="tweet")
    p.add_argument("--schema-label", default="class")
    p.add_argument("--seed", type=int, default=None, help="override the preset seed")
    p.add_argument("--ratio", type=float, default=None, help="override the preset ratio")
    p.add_argument("--param", action=_ParamAction, metavar="KEY=VALUE")
    p.add_argument("--sentiment-on-clean", action="store_true")
    p.add_argument("--keep-hashtag-text", action="store_true")
    p.add_argument("--stratify", action="store_true")
    p.add_argument("--macro-metrics", action="store_true")
    p.set_defaults(func=cmd_matrix)

    p = subs.add_parser("audit", help="leakage audit of a persisted split directory")
    p.add_argument("--split-dir", required=True, help="directory holding train.csv/test.csv")
    p.add_argument("--out", required=True, help="audit JSON output path")
    p.set_defaults(func=cmd_audit)

    p = subs.add_parser("export-model", help="fit on the full corpus and save the model artifact")
    p.add_argument("--recipe", required=True)
    p.add_argument("--clf", required=True, choices=list(evalharness.CLASSIFIER_LABELS))
    p.add_argument("--model-out", required=True)
    p.add_argument("--doc2vec-transductive", action="store_true")
    _add_common_corpus_flags(p)
    _add_common_run_flags(p)
    p.set_defaults(func=cmd_export_model)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, HarnessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        from .corpus import CorpusError
        from .classifiers import ClassifierError
        from .embeddings import EmbeddingError
        from .features import FeatureError
        from .neural import NeuralError

        if isinstance(exc, (CorpusError, ClassifierError, EmbeddingError, FeatureError, NeuralError)):
            print(f"error: {exc}", file=sys.stderr)
            return 2
        raise


if __name__ == "__main__":
    sys.exit(main())
