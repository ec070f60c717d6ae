import json
import random
import string
from pathlib import Path

from hatebench.corpus import Label, LabeledDocument
from hatebench.textprep import (
    StopwordList,
    clean_corpus,
    clean_pipeline,
    lemmatize,
    load_lemma_exceptions,
    load_stopwords,
    remove_stopwords,
    strip_patterns,
    tokenize,
)

DATA = Path(__file__).parent / "data"


def load_pairs(name):
    pairs = []
    for line in (DATA / name).read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        left, right = line.split("\t")
        pairs.append((left, right))
    return pairs


class TestStripPatterns:
    def test_mention_hashtag_url_number(self):
        assert strip_patterns("@user hello #tag http://x.co 123 world") == "hello world"

    def test_empty(self):
        assert strip_patterns("") == ""

    def test_embedded_digits_survive(self):
        assert strip_patterns("covid19 2021") == "covid19"

    def test_fixture_oracle(self):
        cases = json.loads((DATA / "strip_fixture.json").read_text(encoding="utf-8"))["cases"]
        assert len(cases) == 50
        for raw, expected in cases:
            assert strip_patterns(raw) == expected, f"input {raw!r}"

    def test_keep_hashtag_text_flag(self):
        assert strip_patterns("#happy day", keep_hashtag_text=True) == "happy day"
        assert strip_patterns("#happy day", keep_hashtag_text=False) == "day"

    def test_plain_words_untouched_property(self):
        # random alphabetic sentences pass through unchanged
        rng = random.Random(7)
        for _ in range(200):
            words = [
                "".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(1, 10)))
                for _ in range(rng.randint(1, 12))
            ]
            sentence = " ".join(words)
            assert strip_patterns(sentence) == sentence


class TestTokenize:
    def test_punctuation_stripped(self):
        assert tokenize("Hello, World!") == ["hello", "world"]

    def test_internal_apostrophe_kept(self):
        assert tokenize("don't stop") == ["don't", "stop"]

    def test_punctuation_only_tokens_dropped(self):
        assert tokenize("!!! ??? ... " * 250) == []

    def test_lowercases(self):
        assert tokenize("MiXeD CaSe") == ["mixed", "case"]


class TestRemoveStopwords:
    def test_filters(self):
        stops = StopwordList(frozenset({"the"}))
        assert remove_stopwords(["the", "cat", "sat"], stops) == ["cat", "sat"]

    def test_empty_stoplist_is_identity(self):
        stops = StopwordList(frozenset())
        assert remove_stopwords(["a", "b"], stops) == ["a", "b"]

    def test_all_stopwords(self):
        stops = StopwordList(frozenset({"a", "b"}))
        assert remove_stopwords(["a", "b", "a"], stops) == []

    def test_bundled_list_is_wellformed(self):
        stops = load_stopwords()
        assert len(stops.words) >= 150
        assert all(w == w.lower() and w and " " not in w for w in stops.words)
        assert "the" in stops and "were" in stops


class TestLemmatize:
    def test_running_ran_runs(self):
        assert lemmatize(["running", "ran", "runs"]) == ["run", "run", "run"]

    def test_fixed_point(self):
        assert lemmatize(["run"]) == ["run"]

    def test_fixture_accuracy_floor(self):
        pairs = load_pairs("lemma_fixture.tsv")
        assert len(pairs) >= 200
        exceptions = load_lemma_exceptions()
        hits = sum(1 for inflected, lemma in pairs if lemmatize([inflected], exceptions) == [lemma])
        assert hits / len(pairs) >= 0.95, f"{hits}/{len(pairs)} fixture matches"

    def test_idempotent_on_fixture_output(self):
        pairs = load_pairs("lemma_fixture.tsv")
        exceptions = load_lemma_exceptions()
        once = lemmatize([p[0] for p in pairs], exceptions)
        twice = lemmatize(once, exceptions)
        assert twice == once

    def test_never_empties_token(self):
        exceptions = load_lemma_exceptions()
        for tok in ["s", "es", "ed", "ing", "ies", "sses", "a"]:
            out = lemmatize([tok], exceptions)
            assert out[0], f"{tok!r} lemmatized to empty"


class TestCleanPipeline:
    STOPS = StopwordList(frozenset({"the", "were"}))

    def doc(self, text):
        return LabeledDocument(id="d1", text=text, label=Label.NONHATE)

    def test_stage_composition(self):
        # strip: drop @a and #now; tokenize: lowercase; stopwords: the, were;
        # lemmatize: cats->cat, running->run
        seq = clean_pipeline(self.doc("@a The cats were running #now"), self.STOPS, {})
        assert seq.tokens == ("cat", "run")
        assert seq.doc_id == "d1"

    def test_all_content_stripped_flagged(self):
        result = clean_corpus([self.doc("http://a.b 42")], self.STOPS, {})
        assert result.sequences[0].tokens == ()
        assert result.empty_ids == ["d1"]

    def test_idempotent_on_rejoined_output(self):
        docs = [
            self.doc("@a The cats were running #now"),
            self.doc("Dogs BARKED loudly, twice!"),
            self.doc("she likes running http://x.y 99"),
        ]
        for d in docs:
            once = clean_pipeline(d, self.STOPS, load_lemma_exceptions())
            rejoined = LabeledDocument(id=d.id, text=" ".join(once.tokens), label=d.label)
            again = clean_pipeline(rejoined, self.STOPS, load_lemma_exceptions())
            assert again.tokens == once.tokens

    def test_no_invented_tokens(self):
        rng = random.Random(3)
        stops = load_stopwords()
        for _ in range(100):
            words = ["".join(rng.choice("abcdefg") for _ in range(rng.randint(2, 8))) for _ in range(8)]
            d = self.doc(" ".join(words))
            seq = clean_pipeline(d, stops)
            # every output token must be derivable: prefix of some input word
            for tok in seq.tokens:
                assert any(w.startswith(tok[: max(1, len(tok) - 1)]) for w in words)
