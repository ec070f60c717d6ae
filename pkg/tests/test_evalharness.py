import json
import random

import numpy as np
import pytest

from hatebench.corpus import Label, LabeledDocument, split
from hatebench.evalharness import (
    ConfusionCounts,
    ExperimentSpec,
    GuardedList,
    HarnessError,
    HygieneMonitor,
    MetricsReport,
    ResultRow,
    ResultTable,
    builtin_preset_path,
    confusion,
    emit_report,
    fmt4,
    leakage_audit,
    load_preset,
    metrics,
    metrics_macro,
    parse_report_csv,
    plant_duplicates,
    run_experiment,
    run_experiment_on_split,
    run_matrix,
    write_provenance,
)
from hatebench.plots import render_report_figures


def make_docs(n_hate, n_nonhate, text_fn=None):
    docs = []
    for i in range(n_hate + n_nonhate):
        label = Label.HATE if i < n_hate else Label.NONHATE
        text = text_fn(i, label) if text_fn else f"text number {i}"
        docs.append(LabeledDocument(str(i), text, label))
    return docs


def signal_corpus(n=120, seed=5, ambiguous=0.0):
    """Small class-correlated corpus for fast harness tests."""
    rng = random.Random(seed)
    hate_words = ["vile", "scum", "trash", "filth"]
    calm_words = ["garden", "picnic", "melody", "sunny"]
    shared = [f"w{i}" for i in range(12)]
    docs = []
    for i in range(n):
        hate = rng.random() < 0.5
        if rng.random() < ambiguous:
            words = rng.choices(shared, k=8)
        else:
            words = rng.choices(hate_words if hate else calm_words, k=3) + rng.choices(shared, k=5)
            rng.shuffle(words)
        docs.append(
            LabeledDocument(str(i), " ".join(words), Label.HATE if hate else Label.NONHATE)
        )
    return docs


class TestConfusion:
    def test_perfect_three(self):
        c = confusion([1, 0, 1], [1, 0, 1])
        assert (c.tp, c.tn, c.fp, c.fn) == (2, 1, 0, 0)

    def test_all_negative_predictions(self):
        c = confusion([0] * 5, [1] * 5)
        assert (c.tp, c.fp, c.tn, c.fn) == (0, 0, 0, 5)

    def test_accepts_label_enums(self):
        c = confusion([Label.HATE, Label.NONHATE], [Label.HATE, Label.HATE])
        assert (c.tp, c.fn) == (1, 1)

    def test_random_1000_pairs_match_brute_force(self):
        rng = random.Random(42)
        pred = [rng.randint(0, 1) for _ in range(1000)]
        truth = [rng.randint(0, 1) for _ in range(1000)]
        c = confusion(pred, truth)
        # independent tally
        tally = {"tp": 0, "fp": 0, "tn": 0, "fn": 0}
        for p, t in zip(pred, truth):
            key = ("t" if p == t else "f") + ("p" if p == 1 else "n")
            tally[key] += 1
        assert (c.tp, c.fp, c.tn, c.fn) == (tally["tp"], tally["fp"], tally["tn"], tally["fn"])
        assert c.total == 1000

    def test_length_mismatch(self):
        with pytest.raises(HarnessError):
            confusion([1], [1, 0])

    def test_empty_rejected(self):
        with pytest.raises(HarnessError):
            confusion([], [])


class TestMetrics:
    def test_perfect_classifier_all_ones(self):
        report = metrics(ConfusionCounts(tp=10, fp=0, tn=0, fn=0))
        assert (report.accuracy, report.precision, report.recall, report.f1) == (1.0, 1.0, 1.0, 1.0)

    def test_hand_arithmetic(self):
        report = metrics(ConfusionCounts(tp=50, fp=10, tn=30, fn=10))
        assert report.accuracy == pytest.approx(0.8, abs=1e-12)
        assert report.precision == pytest.approx(50 / 60, abs=1e-12)
        assert report.recall == pytest.approx(50 / 60, abs=1e-12)
        assert fmt4(report.precision) == "0.8333"
        assert fmt4(report.f1) == "0.8333"

    def test_zero_rule(self):
        report = metrics(ConfusionCounts(tp=0, fp=0, tn=5, fn=5))
        assert report.precision == 0.0
        assert report.recall == 0.0
        assert report.f1 == 0.0
        assert report.accuracy == 0.5

    def test_thousand_randomized_counts_vs_hand_formulas(self):
        rng = random.Random(9)
        for _ in range(1000):
            tp, fp, tn, fn = (rng.randint(0, 50) for _ in range(4))
            if tp + fp + tn + fn == 0:
                tp = 1
            c = ConfusionCounts(tp=tp, fp=fp, tn=tn, fn=fn)
            r = metrics(c)
            total = tp + fp + tn + fn
            assert r.accuracy == (tp + tn) / total  # exact
            p = tp / (tp + fp) if tp + fp else 0.0
            q = tp / (tp + fn) if tp + fn else 0.0
            f = 2 * p * q / (p + q) if p + q else 0.0
            assert abs(r.precision - p) < 1e-12
            assert abs(r.recall - q) < 1e-12
            assert abs(r.f1 - f) < 1e-12

    def test_zero_total_rejected(self):
        with pytest.raises(HarnessError):
            metrics(ConfusionCounts(0, 0, 0, 0))

    def test_macro_average(self):
        c = ConfusionCounts(tp=8, fp=2, tn=5, fn=5)
        macro = metrics_macro(c)
        pos = metrics(c)
        neg = metrics(ConfusionCounts(tp=5, fp=5, tn=8, fn=2))
        assert macro.precision == pytest.approx((pos.precision + neg.precision) / 2)
        assert macro.f1 == pytest.approx((pos.f1 + neg.f1) / 2)


class TestFmt4:
    def test_half_up_rounding(self):
        assert fmt4(0.83334999) == "0.8333"
        assert fmt4(0.83335) == "0.8334"
        assert fmt4(1.0) == "1.0000"
        assert fmt4(0.0) == "0.0000"

    def test_four_decimals_always(self):
        assert fmt4(0.5) == "0.5000"


class TestHygieneMonitor:
    def test_access_outside_fit_is_free(self):
        monitor = HygieneMonitor()
        guarded = GuardedList([1, 2, 3], monitor)
        _ = list(guarded)
        _ = guarded[0]
        assert monitor.violations == 0

    def test_access_inside_fit_counts(self):
        monitor = HygieneMonitor()
        guarded = GuardedList([1, 2, 3], monitor)
        with monitor.fit_phase():
            _ = guarded[1]
            _ = list(guarded)
        assert monitor.violations == 4

    def test_normal_run_reports_zero(self, tmp_path):
        spec = ExperimentSpec(recipe="bow+sentiment", classifier="nb", seed=3,
                              params={"max_features": 30, "ngram_max": 2})
        sp = split(signal_corpus(), 0.7, seed=3)
        result = run_experiment_on_split(spec, sp, workdir=tmp_path)
        assert result.provenance["hygiene_violations"] == 0

    def test_transductive_doc2vec_is_flagged_not_fatal(self, tmp_path):
        spec = ExperimentSpec(
            recipe="doc2vec", classifier="nb", seed=3, doc2vec_transductive=True,
            params={"d2v_dim": 8, "d2v_epochs": 1},
        )
        sp = split(signal_corpus(60), 0.7, seed=3)
        result = run_experiment_on_split(spec, sp, workdir=tmp_path)
        assert result.provenance["hygiene_violations"] > 0


class TestRunExperiment:
    def test_tfidf_sentiment_width(self, tmp_path):
        spec = ExperimentSpec(recipe="tfidf+sentiment", classifier="lr", seed=5,
                              params={"max_features": 40, "ngram_max": 2, "lr_epochs": 50})
        sp = split(signal_corpus(), 0.7, seed=5)
        result = run_experiment_on_split(spec, sp, workdir=tmp_path)
        assert result.width == 41

    def test_sent2vec_sentiment_width(self, tmp_path):
        spec = ExperimentSpec(recipe="sent2vec+sentiment", classifier="dt", seed=5,
                              params={"sent2vec_dim": 24})
        sp = split(signal_corpus(60), 0.7, seed=5)
        result = run_experiment_on_split(spec, sp, workdir=tmp_path)
        assert result.width == 25

    def test_constant_classifier_equals_majority_rate(self, tmp_path):
        docs = [LabeledDocument(str(i), "same text every time",
                                Label.HATE if i < 150 else Label.NONHATE) for i in range(300)]
        sp = split(docs, 0.7, seed=7)
        spec = ExperimentSpec(recipe="bow", classifier="dt", seed=7, params={"max_features": 5})
        result = run_experiment_on_split(spec, sp, workdir=tmp_path)
        train_majority = Label.HATE if sum(
            1 for d in sp.train if d.label is Label.HATE) * 2 > len(sp.train) else Label.NONHATE
        majority_rate = np.mean([d.label is train_majority for d in sp.test])
        assert result.report.accuracy == pytest.approx(majority_rate, abs=1e-12)
        assert abs(result.report.accuracy - 0.5) <= 0.05

    def test_deterministic_reports(self, tmp_path):
        spec = ExperimentSpec(recipe="bow+sentiment", classifier="rf", seed=9,
                              params={"max_features": 30, "ngram_max": 2, "rf_trees": 11})
        sp = split(signal_corpus(), 0.7, seed=9)
        a = run_experiment_on_split(spec, sp, workdir=tmp_path)
        b = run_experiment_on_split(spec, sp, workdir=tmp_path)
        assert a.report == b.report

    def test_unknown_classifier(self):
        with pytest.raises(HarnessError, match="unknown classifier"):
            run_experiment(ExperimentSpec(classifier="svm"), docs=signal_corpus(20))


class TestPreset:
    def test_paper_matrix_has_28_cells(self):
        specs = load_preset(builtin_preset_path("paper_matrix"))
        assert len(specs) == 28
        classical = [s for s in specs if s.classifier in ("lr", "dt", "rf", "nb")]
        neural = [s for s in specs if s.classifier in ("bilstm", "bigru")]
        assert len(classical) == 24 and len(neural) == 4

    def test_paper_matrix_recipe_structure(self):
        specs = load_preset(builtin_preset_path("paper_matrix"))
        recipes = []
        for s in specs:
            if s.recipe not in recipes:
                recipes.append(s.recipe)
        assert recipes == [
            "bow+sentiment", "tfidf+sentiment", "doc2vec", "sent2vec+sentiment",
            "tfidf+doc2vec+sentiment", "bow+doc2vec+sentiment", "glove", "word2vec",
        ]

    def test_table4_shaped_rows_are_lr_dt_rf_nb(self):
        specs = load_preset(builtin_preset_path("paper_matrix"))
        sent2vec_rows = [s.classifier for s in specs if s.recipe == "sent2vec+sentiment"]
        assert sent2vec_rows == ["lr", "dt", "rf", "nb"]

    def test_overrides(self):
        specs = load_preset(builtin_preset_path("paper_matrix"), corpus="/tmp/x.csv", seed=123)
        assert all(s.corpus == "/tmp/x.csv" for s in specs)
        assert all(s.seed == 123 for s in specs)

    def test_missing_preset(self, tmp_path):
        with pytest.raises(HarnessError, match="not found"):
            load_preset(tmp_path / "nope.preset")

    def test_syntax_error_cites_line(self, tmp_path):
        path = tmp_path / "bad.preset"
        path.write_text("[table]\nthis line has no equals\n")
        with pytest.raises(HarnessError, match="line 2"):
            load_preset(path)


class TestRunMatrix:
    def small_specs(self, n=2):
        docs_params = {"max_features": 20, "ngram_max": 2, "lr_epochs": 30, "rf_trees": 5}
        return [
            ExperimentSpec(recipe="bow+sentiment", classifier=kind, seed=4, params=dict(docs_params))
            for kind in ("lr", "nb")[:n]
        ]

    def test_single_spec_equals_run_experiment(self, tmp_path, monkeypatch):
        corpus = signal_corpus()
        spec = self.small_specs(1)[0]
        table = run_matrix_with_docs([spec], corpus, tmp_path)
        direct = run_experiment(spec, docs=corpus, workdir=tmp_path)
        assert table.rows[0].report == direct.report

    def test_error_isolation(self, tmp_path):
        good = self.small_specs(1)[0]
        bad = ExperimentSpec(recipe="bow", classifier="lr", seed=4,
                             params={"max_features": 10, "ngram_min": 5, "ngram_max": 2})
        table = run_matrix_with_docs([bad, good], signal_corpus(), tmp_path)
        assert table.rows[0].error is not None
        assert table.rows[1].error is None
        assert len(table.rows) == 2

    def test_jobs_parallel_same_result(self, tmp_path):
        specs = self.small_specs(2)
        corpus = signal_corpus()
        seq_table = run_matrix_with_docs(list(specs), corpus, tmp_path)
        par_table = run_matrix_with_docs(list(specs), corpus, tmp_path, jobs=2)
        for a, b in zip(seq_table.rows, par_table.rows):
            assert a.report == b.report


def run_matrix_with_docs(specs, docs, workdir, jobs=1):
    """Matrix over an in-memory corpus: route loads through a temp CSV."""
    import csv as _csv
    from pathlib import Path

    path = Path(workdir) / "corpus.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = _csv.writer(fh)
        writer.writerow(["tweet", "class"])
        for d in docs:
            writer.writerow([d.text, "hate" if d.label is Label.HATE else "neither"])
    for spec in specs:
        spec.corpus = str(path)
    return run_matrix(specs, jobs=jobs, workdir=workdir)


class TestLeakage:
    def test_disjoint_split_zero_duplicates(self):
        # distinct words, not just distinct digits (digits are cleaned away)
        docs = make_docs(3, 3, text_fn=lambda i, lab: f"unique sample alpha{i} beta{i}")
        sp = split(docs, 0.5, seed=1)
        audit = leakage_audit(sp)
        assert audit.exact_duplicates == 0
        assert audit.near_duplicates == 0

    def test_planted_duplicate_counted(self):
        docs = make_docs(4, 4, text_fn=lambda i, lab: f"unique text {i}")
        sp = split(docs, 0.5, seed=1)
        train = list(sp.train)
        test = list(sp.test)
        test[0] = LabeledDocument("copy", train[0].text, train[0].label)
        from hatebench.corpus import DatasetSplit

        audit = leakage_audit(DatasetSplit(tuple(train), tuple(test), sp.ratio, sp.seed))
        assert audit.exact_duplicates == 1

    def test_near_duplicate_detection(self):
        # different raw strings, identical cleaned tokens
        docs = [
            LabeledDocument("a", "The cats were running", Label.HATE),
            LabeledDocument("b", "unrelated words entirely", Label.NONHATE),
            LabeledDocument("c", "cats RUNNING!!! @user", Label.HATE),
            LabeledDocument("d", "other thing altogether", Label.NONHATE),
        ]
        from hatebench.corpus import DatasetSplit

        sp = DatasetSplit(train=(docs[0], docs[1]), test=(docs[2], docs[3]), ratio=0.5, seed=0)
        audit = leakage_audit(sp)
        assert audit.exact_duplicates == 0
        assert audit.near_duplicates == 1

    def test_plant_duplicates_exact_fraction(self):
        docs = make_docs(40, 40, text_fn=lambda i, lab: f"some unique text {i}")
        sp = split(docs, 0.7, seed=2)
        planted = plant_duplicates(sp, fraction=0.3, seed=5)
        expected = int(0.3 * len(sp.test))
        audit = leakage_audit(planted)
        assert audit.exact_duplicates == expected
        assert len(planted.test) == len(sp.test)
        # ids stay disjoint between train and test
        assert {d.id for d in planted.train}.isdisjoint({d.id for d in planted.test})

    def test_planting_raises_dt_f1(self, tmp_path):
        docs = signal_corpus(n=240, seed=8, ambiguous=0.25)
        sp = split(docs, 0.7, seed=8)
        spec = ExperimentSpec(recipe="bow", classifier="dt", seed=8,
                              params={"max_features": 30, "ngram_max": 1})
        clean = run_experiment_on_split(spec, sp, workdir=tmp_path)
        leaky = run_experiment_on_split(spec, plant_duplicates(sp, 0.3, seed=8), workdir=tmp_path)
        assert clean.report.f1 < 1.0
        assert leaky.report.f1 > clean.report.f1


class TestReports:
    def one_row_table(self):
        return ResultTable(rows=[ResultRow(
            classifier_label="LR", features_label="BoW+Sentiment",
            report=MetricsReport(accuracy=0.9, precision=0.83334999, recall=0.83335, f1=0.5),
        )])

    def test_csv_two_lines(self, tmp_path):
        path = emit_report(self.one_row_table(), "csv", tmp_path / "r.csv")
        lines = path.read_text().splitlines()
        assert len(lines) == 2
        assert lines[0] == "Classifier,Features,Accuracy,Precision,Recall,F1"
        assert lines[1] == "LR,BoW+Sentiment,0.9000,0.8333,0.8334,0.5000"

    def test_markdown_pipe_table(self, tmp_path):
        path = emit_report(self.one_row_table(), "markdown", tmp_path / "r.md")
        lines = path.read_text().splitlines()
        assert lines[0].startswith("| Classifier | Features |")
        assert "| LR | BoW+Sentiment | 0.9000 |" in lines[2]

    def test_csv_roundtrip(self, tmp_path):
        table = self.one_row_table()
        path = emit_report(table, "csv", tmp_path / "r.csv")
        back = parse_report_csv(path)
        assert back.rows[0].classifier_label == "LR"
        assert fmt4(back.rows[0].report.precision) == "0.8333"
        # re-emit reproduces the same bytes
        path2 = emit_report(back, "csv", tmp_path / "r2.csv")
        assert path.read_text() == path2.read_text()

    def test_error_cells_rendered(self, tmp_path):
        table = ResultTable(rows=[ResultRow(classifier_label="DT", features_label="X", error="boom")])
        path = emit_report(table, "csv", tmp_path / "r.csv")
        assert "DT,X,ERROR,ERROR,ERROR,ERROR" in path.read_text()

    def test_empty_table_rejected(self, tmp_path):
        with pytest.raises(HarnessError):
            emit_report(ResultTable(rows=[]), "csv", tmp_path / "r.csv")

    def test_provenance_sidecar(self, tmp_path):
        table = self.one_row_table()
        path = write_provenance(table, tmp_path / "prov.json", extra={"seed": 7})
        record = json.loads(path.read_text())
        assert record["seed"] == 7
        assert record["rows"][0]["classifier"] == "LR"

    def test_figures_rendered(self, tmp_path):
        table = ResultTable(rows=[
            ResultRow("LR", "BoW", report=MetricsReport(0.9, 0.8, 0.7, 0.75)),
            ResultRow("DT", "BoW", report=MetricsReport(0.8, 0.7, 0.6, 0.65)),
            ResultRow("LR", "TF-IDF", report=MetricsReport(0.9, 0.8, 0.7, 0.75)),
        ])
        paths = render_report_figures(table, tmp_path)
        assert len(paths) == 3  # two recipes + overview
        assert all(p.exists() and p.stat().st_size > 0 for p in paths)
