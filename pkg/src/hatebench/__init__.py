"""From-scratch text-classification benchmarking toolkit.

Binary hate / non-hate pipelines: corpus loading and seeded splits, a
regex-stopword-lemma cleaning chain, n-gram BoW / TF-IDF / lexicon
sentiment / document-embedding features, from-scratch classical and
bidirectional recurrent classifiers, and an experiment-matrix harness
with leakage auditing and report emission.
"""

__version__ = "0.1.0"
